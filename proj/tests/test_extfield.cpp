#include <bit>
#include <random>

#include "doctest.h"
#include "seqlc/extfield.hpp"

using namespace seqlc;

namespace {

BinaryPolynomial P(const char* s) { return BinaryPolynomial::parse(s); }

ExtensionElement E(const FieldPtr& f, const char* s) { return ExtensionElement(f, P(s)); }

}  // namespace

TEST_CASE("field construction") {
  CHECK_THROWS_AS(ExtensionField::create(P("101")), std::invalid_argument);
  const auto f = ExtensionField::create(P("11111"));
  CHECK(f->degree() == 4);
  CHECK(ExtensionElement(f, P("000001")) == E(f, "11111") + E(f, "000001"));  // x^5 reduces mod p
}

TEST_CASE("ext_mul examples") {
  const auto f = ExtensionField::create(P("111"));
  const auto x = ExtensionElement::generator(f);
  CHECK(ext_mul(x, x) == E(f, "11"));
  CHECK(ext_mul(E(f, "11"), ExtensionElement::one(f)) == E(f, "11"));
  const auto g = ExtensionField::create(P("11111"));
  CHECK(ext_mul(ExtensionElement::generator(g), E(g, "00001")).is_one());
  CHECK_THROWS_AS(ext_mul(x, ExtensionElement::generator(g)), ContextMismatch);
}

TEST_CASE("ext_inv examples") {
  const auto f = ExtensionField::create(P("111"));
  CHECK(ext_inv(ExtensionElement::one(f)).is_one());
  CHECK(ext_inv(ExtensionElement::generator(f)) == E(f, "11"));
  const auto g = ExtensionField::create(P("11111"));
  const auto xi = ext_inv(ExtensionElement::generator(g));
  CHECK(xi == E(g, "1111"));
  CHECK((xi * ExtensionElement::generator(g)).is_one());
  CHECK_THROWS_AS(ext_inv(ExtensionElement::zero(g)), std::domain_error);
}

TEST_CASE("ext_pow examples") {
  const auto g = ExtensionField::create(P("11111"));
  const auto a = ExtensionElement::generator(g);
  CHECK(ext_pow(a, 0).is_one());
  CHECK(ext_pow(a, 5).is_one());
  CHECK(ext_pow(a, -1) == ext_inv(a));
  CHECK(ext_pow(a, BigInt(1) << 200) == ext_pow_mod_order(a, BigInt(1) << 200, 5));
  CHECK(ext_pow(a, (BigInt(1) << 90) + 3) == ext_pow(a, ((BigInt(1) << 90) + 3) % 5));
  CHECK_THROWS(ext_pow(ExtensionElement::zero(g), -1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(31);
  for (const char* mod : {"11", "111", "11001", "11111", "11000001"}) {
    const auto f = ExtensionField::create(P(mod));
    const int d = f->degree();
    auto rand_elem = [&] { return ExtensionElement(f, BinaryPolynomial::from_word(rng() & ((1ull << d) - 1))); };
    for (int i = 0; i < 1000; ++i) {
      const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) REQUIRE((a * ext_inv(a)).is_one());
    }
  }
}

TEST_CASE("serialization") {
  const auto f = ExtensionField::create(P("1101"));
  CHECK(E(f, "011").serialize() == "mod=1101\n011");
  CHECK(ExtensionElement::zero(f).serialize() == "mod=1101\n0");
}

TEST_CASE("extpoly_gcd examples") {
  const auto f = ExtensionField::create(P("11"));  // F2 itself
  const auto one = ExtensionElement::one(f), zero = ExtensionElement::zero(f);
  const ExtensionPolynomial e(f, {one, one});
  const ExtensionPolynomial j(f, {one, zero, one});
  CHECK(extpoly_gcd(e, j) == e);
  CHECK(extpoly_gcd(e, j).degree() == 1);
  const ExtensionPolynomial unit(f, {one});
  CHECK(extpoly_gcd(j, unit) == unit);

  const auto g = ExtensionField::create(P("1101"));
  const auto x = ExtensionElement::generator(g);
  const ExtensionPolynomial w(g, {x, x * x, x});
  const auto monic = extpoly_gcd(w, w);
  CHECK(monic.leading().is_one());
  CHECK(monic.degree() == 2);
  CHECK_THROWS(extpoly_gcd(ExtensionPolynomial(g), ExtensionPolynomial(g)));
}

TEST_CASE("extpoly_gcd divides both inputs") {
  std::mt19937_64 rng(32);
  const auto f = ExtensionField::create(P("11001"));
  auto rand_poly = [&](int deg) {
    std::vector<ExtensionElement> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(f, BinaryPolynomial::from_word(rng() & 15));
    c.back() = ExtensionElement::one(f);
    return ExtensionPolynomial(f, c);
  };
  for (int i = 0; i < 200; ++i) {
    const auto common = rand_poly(static_cast<int>(rng() % 4));
    const auto a = extpoly_mul(rand_poly(static_cast<int>(rng() % 8)), common);
    const auto b = extpoly_mul(rand_poly(static_cast<int>(rng() % 8)), common);
    const auto g = extpoly_gcd(a, b);
    CHECK(extpoly_mod(a, g).is_zero());
    CHECK(extpoly_mod(b, g).is_zero());
    CHECK(extpoly_mod(g, extpoly_gcd(common, common)).is_zero());
    CHECK(g.degree() <= std::min(a.degree(), b.degree()));
  }
}

TEST_CASE("generator is invertible for every factor of x^n + 1") {
  for (int n = 1; n <= 64; ++n) {
    for (const auto& fac : factor_xn_plus_1(n).factors) {
      const auto f = ExtensionField::create(fac.poly);
      const auto a = ExtensionElement::generator(f);
      REQUIRE(fac.poly.coeff(0));
      REQUIRE((a * ext_inv(a)).is_one());
      REQUIRE(ext_pow(a, n >> std::countr_zero(static_cast<unsigned>(n))).is_one());
    }
  }
}
