#include "seqlc/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace seqlc {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto src = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = src[w];
      while (bits) {
        const auto k = static_cast<std::size_t>(std::countr_zero(bits));
        t.set(w * kWordBits + k, r, true);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

void BitMatrix::set_block(std::size_t r0, std::size_t c0, const BitMatrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_) throw std::out_of_range("block exceeds matrix");
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) set(r0 + r, c0 + c, block.get(r, c));
  }
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(r, k)) continue;
      const auto src = b.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch in matrix sum");
  BitMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
  return out;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix work = m;
  return rank_in_place(work);
}

std::size_t rank_in_place(BitMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols(), stride = m.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t w = c / BitMatrix::kWordBits;
    const BitMatrix::Word bit = BitMatrix::Word{1} << (c % BitMatrix::kWordBits);
    std::size_t pivot = r;
    while (pivot < rows && !(m.row(pivot)[w] & bit)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      auto a = m.row(pivot), b = m.row(r);
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(w), a.end(), b.begin() + static_cast<std::ptrdiff_t>(w));
    }
    const BitMatrix::Word* src = m.row(r).data();
    for (std::size_t i = r + 1; i < rows; ++i) {
      BitMatrix::Word* dst = m.row(i).data();
      if (!(dst[w] & bit)) continue;
      for (std::size_t k = w; k < stride; ++k) dst[k] ^= src[k];
    }
    ++r;
  }
  return r;
}

BitMatrix circulant(std::span<const std::uint8_t> seq, bool r) {
  if (seq.empty()) throw std::invalid_argument("circulant of an empty sequence");
  const std::size_t n = seq.size();
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool wrapped = j < i;
      const bool v = seq[(j + n - i) % n] & 1;
      if (v && (!wrapped || r)) m.set(i, j, true);
    }
  }
  return m;
}

BitMatrix companion(const BinaryPolynomial& g) {
  const int d = g.degree();
  if (d < 1) throw std::invalid_argument("companion matrix of a constant polynomial");
  const auto n = static_cast<std::size_t>(d);
  BitMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, true);
  for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, g.coeff(static_cast<int>(j)));
  return m;
}

BitMatrix poly_at_matrix(const BinaryPolynomial& f, const BitMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  BitMatrix acc(m.rows(), m.cols());
  const BitMatrix id = BitMatrix::identity(m.rows());
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * m;
    if (f.coeff(k)) acc = acc + id;
  }
  return acc;
}

BinaryPolynomial minimal_polynomial(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial needs a square matrix");
  const std::size_t n = m.rows();
  // Flattened powers I, M, M^2, ... reduced against earlier ones; the first
  // power that reduces to zero yields the minimal relation.
  struct Reduced {
    std::vector<std::uint8_t> bits;
    std::size_t pivot;
    BinaryPolynomial combo;
  };
  std::vector<Reduced> basis;
  BitMatrix power = BitMatrix::identity(n);
  for (int k = 0; k <= static_cast<int>(n); ++k) {
    std::vector<std::uint8_t> v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = power.get(r, c);
    BinaryPolynomial combo = BinaryPolynomial::monomial(k);
    for (const auto& b : basis) {
      if (v[b.pivot]) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b.bits[i];
        combo += b.combo;
      }
    }
    const auto it = std::find(v.begin(), v.end(), 1);
    if (it == v.end()) return combo;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    basis.push_back({std::move(v), pivot, std::move(combo)});
    power = power * m;
  }
  throw std::logic_error("minimal polynomial exceeded matrix dimension");
}

int rank_of_poly_at_companion(const BinaryPolynomial& f, const BinaryPolynomial& g) {
  if (g.degree() < 1) throw std::invalid_argument("companion of a constant polynomial");
  const BinaryPolynomial r = poly_mod(f, g);
  return g.degree() - poly_gcd(r, g).degree();
}

BitMatrix multiplication_matrix(const ExtensionElement& a) {
  const auto& field = a.field();
  const int d = field->degree();
  BitMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const ExtensionElement col = a * ExtensionElement(field, BinaryPolynomial::monomial(k));
    for (int i = 0; i < d; ++i) {
      if (col.representative().coeff(i)) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), true);
    }
  }
  return m;
}

int rank_ext(ExtensionMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const ExtensionElement inv = ext_inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const ExtensionElement factor = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] + factor * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

ExtensionMatrix r_circulant_ext(const ExtensionPolynomial& w, int m, const ExtensionElement& r) {
  if (m < 1) throw std::invalid_argument("circulant dimension must be positive");
  ExtensionMatrix out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto& row = out[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      if (j >= i) {
        row.push_back(w.coeff(j - i));
      } else {
        row.push_back(r * w.coeff(m + j - i));
      }
    }
  }
  return out;
}

BitMatrix expand_to_gf2(const ExtensionMatrix& m) {
  if (m.empty()) return {};
  const std::size_t d = static_cast<std::size_t>(m[0][0].field()->degree());
  BitMatrix out(m.size() * d, m[0].size() * d);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out.set_block(i * d, j * d, multiplication_matrix(m[i][j]));
  }
  return out;
}

int r_circulant_rank_ext(const ExtensionPolynomial& w, int m, const ExtensionElement& r) {
  if (r.is_zero()) throw std::invalid_argument("r-circulant needs r != 0");
  if (m < 1) throw std::invalid_argument("circulant dimension must be positive");
  if (w.degree() >= m) throw std::invalid_argument("symbol degree must be below the dimension");
  if (!w.field()->same_as(*r.field())) throw ContextMismatch();
  const FieldPtr& field = r.field();
  std::vector<ExtensionElement> j(static_cast<std::size_t>(m) + 1, ExtensionElement::zero(field));
  j.front() = r;  // y^m - r = y^m + r in characteristic 2
  j.back() = ExtensionElement::one(field);
  const ExtensionPolynomial jpoly(field, std::move(j));
  return m - extpoly_gcd(w, jpoly).degree();
}

BlockRank block_rank_check(const PolyGrid& entries, const BinaryPolynomial& p, int rexp) {
  if (rexp < 1) throw std::invalid_argument("block_rank_check needs rexp >= 1");
  const FieldPtr field = ExtensionField::create(p);  // throws for reducible p
  BinaryPolynomial q = BinaryPolynomial::one();
  for (int i = 0; i < rexp; ++i) q = q * p;
  const BitMatrix s = companion(q);
  const std::size_t m = entries.size();
  const auto d = static_cast<std::size_t>(q.degree());
  BitMatrix full(m * d, m * d);
  ExtensionMatrix reduced(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (entries[i].size() != m) throw std::invalid_argument("block grid must be square");
    for (std::size_t j = 0; j < m; ++j) {
      full.set_block(i * d, j * d, poly_at_matrix(poly_mod(entries[i][j], q), s));
      reduced[i].emplace_back(field, entries[i][j]);
    }
  }
  return {static_cast<int>(rank(full)), rank_ext(std::move(reduced)), static_cast<int>(d)};
}

}  // namespace seqlc
