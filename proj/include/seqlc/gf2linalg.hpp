#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqlc/extfield.hpp"
#include "seqlc/gf2poly.hpp"

namespace seqlc {

/// Dense GF(2) matrix with bit-packed rows.
///
/// Each row occupies words_per_row() 64-bit words; bits past cols() in the
/// last word of a row are always zero, so == compares matrices exactly.
class BitMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

  BitMatrix transpose() const;
  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& block);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Rank over GF(2); works on a private copy.
std::size_t rank(const BitMatrix& m);
/// Rank over GF(2), destroying the input.
std::size_t rank_in_place(BitMatrix& m);

/// Uniformly random matrix from a 64-bit generator.
template <class Rng>
BitMatrix random_bit_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = m.row(r);
    for (auto& w : row) w = static_cast<BitMatrix::Word>(rng());
    if (cols % BitMatrix::kWordBits != 0)
      row.back() &= (BitMatrix::Word{1} << (cols % BitMatrix::kWordBits)) - 1;
  }
  return m;
}

/// r-circulant of seq: row i is seq rotated right by i, with the wrapped
/// entries multiplied by r. Throws on an empty sequence.
BitMatrix circulant(std::span<const std::uint8_t> seq, bool r = true);
/// Companion matrix of g: ones on the superdiagonal, last row g_0..g_{d-1}.
BitMatrix companion(const BinaryPolynomial& g);
/// f(M) by Horner's rule; M square.
BitMatrix poly_at_matrix(const BinaryPolynomial& f, const BitMatrix& m);
/// Minimal polynomial of a square matrix by Krylov iteration on the unit
/// vectors (lcm of the local minimal polynomials).
BinaryPolynomial minimal_polynomial(const BitMatrix& m);

/// rank(f(companion(g))) = deg g - deg gcd(f mod g, g).
int rank_of_poly_at_companion(const BinaryPolynomial& f, const BinaryPolynomial& g);

/// GF(2) matrix of multiplication by `a` in the polynomial basis 1, x, ..., x^(d-1).
BitMatrix multiplication_matrix(const ExtensionElement& a);

using ExtensionMatrix = std::vector<std::vector<ExtensionElement>>;
/// Rank over the extension field by Gaussian elimination.
int rank_ext(ExtensionMatrix m);
/// m x m r-circulant over the extension field with first row w_0..w_{m-1}.
ExtensionMatrix r_circulant_ext(const ExtensionPolynomial& w, int m, const ExtensionElement& r);
/// Expands each entry to its d x d multiplication matrix.
BitMatrix expand_to_gf2(const ExtensionMatrix& m);

/// Rank of the r-circulant with symbol w over the extension field:
/// m - deg gcd(w(y), y^m - r). Requires r != 0 and deg w < m.
int r_circulant_rank_ext(const ExtensionPolynomial& w, int m, const ExtensionElement& r);

struct BlockRank {
  int rank_full = 0;      ///< GF(2) rank of the block-expanded matrix
  int rank_quotient = 0;  ///< rank over F2[x]/(p) of the entrywise reduction
  int block_size = 0;     ///< deg(p^rexp)
};

using PolyGrid = std::vector<std::vector<BinaryPolynomial>>;
/// Builds the block matrix whose (i, j) block is entries[i][j](companion(p^rexp))
/// and reports its GF(2) rank together with the rank of the reduced matrix
/// over F2[x]/(p). Throws for reducible p or rexp < 1.
BlockRank block_rank_check(const PolyGrid& entries, const BinaryPolynomial& p, int rexp);

}  // namespace seqlc
