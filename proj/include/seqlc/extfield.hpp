#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqlc/gf2poly.hpp"

namespace seqlc {

using BigInt = boost::multiprecision::cpp_int;

class ContextMismatch : public std::invalid_argument {
public:
  ContextMismatch() : std::invalid_argument("extension elements from different fields") {}
};

/// The field F2[x]/(p(x)) for an irreducible p. Shared by value-semantic
/// elements through a shared_ptr; immutable after construction.
class ExtensionField {
  struct Private {};

public:
  ExtensionField(Private, BinaryPolynomial modulus);
  /// Throws std::invalid_argument when the modulus is not irreducible.
  static std::shared_ptr<const ExtensionField> create(BinaryPolynomial modulus);

  const BinaryPolynomial& modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return modulus_.degree(); }
  bool same_as(const ExtensionField& other) const noexcept {
    return this == &other || modulus_ == other.modulus_;
  }

private:
  BinaryPolynomial modulus_;
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

/// An element of an ExtensionField, held as its reduced representative.
class ExtensionElement {
public:
  ExtensionElement(FieldPtr field, const BinaryPolynomial& value);

  static ExtensionElement zero(FieldPtr field) { return {std::move(field), {}}; }
  static ExtensionElement one(FieldPtr field) { return {std::move(field), BinaryPolynomial::one()}; }
  /// The class of x.
  static ExtensionElement generator(FieldPtr field) {
    return {std::move(field), BinaryPolynomial::monomial(1)};
  }

  const BinaryPolynomial& representative() const noexcept { return value_; }
  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_one() const noexcept { return value_.is_one(); }

  friend bool operator==(const ExtensionElement& a, const ExtensionElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }
  friend ExtensionElement operator+(const ExtensionElement& a, const ExtensionElement& b);
  friend ExtensionElement operator*(const ExtensionElement& a, const ExtensionElement& b);

  /// "mod=<bitstring>\n<bitstring>"
  std::string serialize() const;

private:
  FieldPtr field_;
  BinaryPolynomial value_;
};

ExtensionElement ext_add(const ExtensionElement& a, const ExtensionElement& b);
ExtensionElement ext_mul(const ExtensionElement& a, const ExtensionElement& b);
/// Extended Euclid on (representative, modulus). Throws std::domain_error on zero.
ExtensionElement ext_inv(const ExtensionElement& a);
ExtensionElement ext_pow(const ExtensionElement& a, std::int64_t e);
ExtensionElement ext_pow(const ExtensionElement& a, const BigInt& e);
/// a^e with e first reduced modulo `order`; the caller certifies a^order = 1.
ExtensionElement ext_pow_mod_order(const ExtensionElement& a, const BigInt& e, std::uint64_t order);

/// Polynomial in y with coefficients in one ExtensionField, lowest degree first.
class ExtensionPolynomial {
public:
  explicit ExtensionPolynomial(FieldPtr field) : field_(std::move(field)) {}
  ExtensionPolynomial(FieldPtr field, std::vector<ExtensionElement> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<ExtensionElement>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const ExtensionElement& leading() const { return coeffs_.back(); }
  ExtensionElement coeff(int i) const;

  friend bool operator==(const ExtensionPolynomial& a, const ExtensionPolynomial& b) {
    return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
  }

private:
  void trim();
  FieldPtr field_;
  std::vector<ExtensionElement> coeffs_;
};

ExtensionPolynomial extpoly_add(const ExtensionPolynomial& a, const ExtensionPolynomial& b);
ExtensionPolynomial extpoly_mul(const ExtensionPolynomial& a, const ExtensionPolynomial& b);
/// Remainder of a modulo b (b != 0).
ExtensionPolynomial extpoly_mod(const ExtensionPolynomial& a, const ExtensionPolynomial& b);
/// Monic gcd; throws when both inputs are zero or the fields differ.
ExtensionPolynomial extpoly_gcd(const ExtensionPolynomial& a, const ExtensionPolynomial& b);

}  // namespace seqlc
