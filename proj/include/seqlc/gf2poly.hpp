#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqlc {

/// Polynomial over GF(2), bit-packed in 64-bit words (bit i = coefficient of x^i).
///
/// Storage is canonical: the last word is never zero, so the zero polynomial
/// has no words at all and equality is plain word equality.
class BinaryPolynomial {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  BinaryPolynomial() = default;
  /// Low 64 coefficients given as a machine word, e.g. 0b111 = 1 + x + x^2.
  static BinaryPolynomial from_word(Word bits);
  static BinaryPolynomial from_exponents(std::initializer_list<int> exponents);
  static BinaryPolynomial from_exponents(const std::vector<int>& exponents);
  static BinaryPolynomial monomial(int k);
  static BinaryPolynomial one() { return from_word(1); }
  /// x^n + 1
  static BinaryPolynomial x_pow_plus_one(int n);
  /// Coefficients a_0, a_1, ... given as 0/1 values.
  static BinaryPolynomial from_coefficients(const std::vector<std::uint8_t>& coeffs);

  /// Accepts the lowest-degree-first bit string ("101" = 1 + x^2) or the
  /// sparse form ("1+x^2", "x^3 + x + 1"). Throws std::invalid_argument.
  static BinaryPolynomial parse(std::string_view text);
  /// Lowest-degree-first bit string; "0" for the zero polynomial.
  std::string to_string() const;

  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(int i) const noexcept;
  void set_coeff(int i, bool value);
  void flip_coeff(int i);
  std::size_t popcount() const noexcept;
  const std::vector<Word>& words() const noexcept { return words_; }

  /// this += other * x^shift
  void add_shifted(const BinaryPolynomial& other, int shift);

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  BinaryPolynomial& operator*=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator-(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
  friend BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b);

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;
  /// Canonical order: by degree, then by the coefficient bits read as an integer.
  friend std::strong_ordering operator<=>(const BinaryPolynomial& a, const BinaryPolynomial& b);

  /// Formal derivative.
  BinaryPolynomial derivative() const;
  /// Reciprocal x^deg f(1/x).
  BinaryPolynomial reversed() const;
  /// Reciprocal padded to a given length: result_k = coeff(len - k).
  BinaryPolynomial reversed(int len) const;
  /// Value at x = 1.
  bool eval_at_one() const noexcept { return popcount() % 2 == 1; }

private:
  void trim();
  void ensure_degree(int d);
  std::vector<Word> words_;
};

class DivisionByZeroPolynomial : public std::domain_error {
public:
  DivisionByZeroPolynomial() : std::domain_error("division by the zero polynomial") {}
};

struct DivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b);
DivMod poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial poly_mod(const BinaryPolynomial& a, const BinaryPolynomial& b);
/// Monic gcd. gcd(f, 0) = f; throws std::invalid_argument when both are zero.
BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b);

struct ExtendedGcd {
  BinaryPolynomial gcd;
  BinaryPolynomial s;  ///< s*a + t*b = gcd
  BinaryPolynomial t;
};
ExtendedGcd poly_xgcd(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// base^e mod modulus
BinaryPolynomial poly_powmod(const BinaryPolynomial& base, std::uint64_t e,
                             const BinaryPolynomial& modulus);
/// x^(2^k) mod modulus, by k repeated squarings.
BinaryPolynomial x_pow_two_pow_mod(int k, const BinaryPolynomial& modulus);
/// f^2 mod modulus; squaring over GF(2) is bit spreading.
BinaryPolynomial poly_square(const BinaryPolynomial& f);

/// Rabin irreducibility test. Throws std::invalid_argument for deg(f) < 1.
bool is_irreducible(const BinaryPolynomial& f);
/// Largest h with p^h | H. Requires H != 0 and deg(p) >= 1.
int multiplicity(BinaryPolynomial H, const BinaryPolynomial& p);

struct Factor {
  BinaryPolynomial poly;
  int multiplicity = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorList {
  std::vector<Factor> factors;
  /// 2-adic valuation of n for x^n + 1; every multiplicity equals 2^sigma.
  int sigma = 0;
  BinaryPolynomial product() const;
};

/// Complete factorization into distinct irreducibles with multiplicities,
/// canonically ordered. sigma is left at 0.
FactorList factor(const BinaryPolynomial& f);
/// Factorization of x^n + 1 with sigma = v2(n); requires n >= 1.
FactorList factor_xn_plus_1(int n);

}  // namespace seqlc
