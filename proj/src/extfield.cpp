#include "seqlc/extfield.hpp"

#include <utility>

namespace seqlc {

ExtensionField::ExtensionField(Private, BinaryPolynomial modulus) : modulus_(std::move(modulus)) {}

FieldPtr ExtensionField::create(BinaryPolynomial modulus) {
  if (modulus.degree() < 1 || !is_irreducible(modulus))
    throw std::invalid_argument("field modulus " + modulus.to_string() + " is not irreducible");
  return std::make_shared<const ExtensionField>(Private{}, std::move(modulus));
}

ExtensionElement::ExtensionElement(FieldPtr field, const BinaryPolynomial& value)
    : field_(std::move(field)), value_(poly_mod(value, field_->modulus())) {}

std::string ExtensionElement::serialize() const {
  return "mod=" + field_->modulus().to_string() + "\n" + value_.to_string();
}

namespace {

void require_same(const ExtensionElement& a, const ExtensionElement& b) {
  if (!a.field()->same_as(*b.field())) throw ContextMismatch();
}

}  // namespace

ExtensionElement operator+(const ExtensionElement& a, const ExtensionElement& b) { return ext_add(a, b); }
ExtensionElement operator*(const ExtensionElement& a, const ExtensionElement& b) { return ext_mul(a, b); }

ExtensionElement ext_add(const ExtensionElement& a, const ExtensionElement& b) {
  require_same(a, b);
  return {a.field(), a.representative() + b.representative()};
}

ExtensionElement ext_mul(const ExtensionElement& a, const ExtensionElement& b) {
  require_same(a, b);
  return {a.field(), a.representative() * b.representative()};
}

ExtensionElement ext_inv(const ExtensionElement& a) {
  if (a.is_zero()) throw std::domain_error("zero has no inverse");
  auto [g, s, t] = poly_xgcd(a.representative(), a.field()->modulus());
  (void)t;
  // The modulus is irreducible, so g = 1.
  return {a.field(), s};
}

ExtensionElement ext_pow(const ExtensionElement& a, std::int64_t e) {
  return ext_pow(a, BigInt(e));
}

ExtensionElement ext_pow(const ExtensionElement& a, const BigInt& e) {
  if (e < 0) {
    if (a.is_zero()) throw std::domain_error("zero raised to a negative power");
    return ext_pow(ext_inv(a), BigInt(-e));
  }
  ExtensionElement result = ExtensionElement::one(a.field());
  ExtensionElement base = a;
  const auto bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

ExtensionElement ext_pow_mod_order(const ExtensionElement& a, const BigInt& e, std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  BigInt r = e % order;
  if (r < 0) r += order;
  return ext_pow(a, r);
}

ExtensionPolynomial::ExtensionPolynomial(FieldPtr field, std::vector<ExtensionElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!c.field()->same_as(*field_)) throw ContextMismatch();
  }
  trim();
}

ExtensionElement ExtensionPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ExtensionElement::zero(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

void ExtensionPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExtensionPolynomial extpoly_add(const ExtensionPolynomial& a, const ExtensionPolynomial& b) {
  if (!a.field()->same_as(*b.field())) throw ContextMismatch();
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<ExtensionElement> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return {a.field(), std::move(c)};
}

ExtensionPolynomial extpoly_mul(const ExtensionPolynomial& a, const ExtensionPolynomial& b) {
  if (!a.field()->same_as(*b.field())) throw ContextMismatch();
  if (a.is_zero() || b.is_zero()) return ExtensionPolynomial(a.field());
  std::vector<ExtensionElement> c(static_cast<std::size_t>(a.degree() + b.degree() + 1),
                                  ExtensionElement::zero(a.field()));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      auto& slot = c[static_cast<std::size_t>(i + j)];
      slot = slot + a.coefficients()[static_cast<std::size_t>(i)] * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {a.field(), std::move(c)};
}

ExtensionPolynomial extpoly_mod(const ExtensionPolynomial& a, const ExtensionPolynomial& b) {
  if (!a.field()->same_as(*b.field())) throw ContextMismatch();
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<ExtensionElement> r = a.coefficients();
  const int db = b.degree();
  const ExtensionElement lead_inv = ext_inv(b.leading());
  const auto& bc = b.coefficients();
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    const auto& top = r[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    const ExtensionElement factor = top * lead_inv;
    const int shift = d - db;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(shift + j)];
      slot = slot + factor * bc[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(std::min<int>(db, static_cast<int>(r.size()))), ExtensionElement::zero(a.field()));
  return {a.field(), std::move(r)};
}

ExtensionPolynomial extpoly_gcd(const ExtensionPolynomial& a, const ExtensionPolynomial& b) {
  if (!a.field()->same_as(*b.field())) throw ContextMismatch();
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  ExtensionPolynomial x = a, y = b;
  while (!y.is_zero()) {
    ExtensionPolynomial r = extpoly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  const ExtensionElement inv = ext_inv(x.leading());
  std::vector<ExtensionElement> monic;
  monic.reserve(x.coefficients().size());
  for (const auto& c : x.coefficients()) monic.push_back(c * inv);
  return {x.field(), std::move(monic)};
}

}  // namespace seqlc
