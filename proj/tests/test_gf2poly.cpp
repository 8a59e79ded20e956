#include <bit>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seqlc/gf2poly.hpp"

using seqlc::BinaryPolynomial;

namespace {

BinaryPolynomial P(const char* s) { return BinaryPolynomial::parse(s); }

BinaryPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  BinaryPolynomial f;
  for (int i = 0; i < d; ++i) f.set_coeff(i, rng() & 1);
  f.set_coeff(d, true);
  return f;
}

}  // namespace

TEST_CASE("text format") {
  CHECK(P("101") == BinaryPolynomial::from_exponents({0, 2}));
  CHECK(P("1+x^2") == P("101"));
  CHECK(P("x^3 + x + 1") == P("1101"));
  CHECK(P("x") == P("01"));
  CHECK(P("0").is_zero());
  CHECK(BinaryPolynomial().to_string() == "0");
  CHECK(P("x^70+1").to_string().size() == 71);
  CHECK(P("1101").to_string() == "1101");
  CHECK_THROWS_AS(P("12"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
}

TEST_CASE("zero polynomial is distinct from one") {
  const BinaryPolynomial zero;
  CHECK(zero.degree() == BinaryPolynomial::kZeroDegree);
  CHECK(zero != BinaryPolynomial::one());
  CHECK(BinaryPolynomial::one().degree() == 0);
  BinaryPolynomial f = P("11");
  f += P("11");
  CHECK(f.is_zero());
  CHECK(f.words().empty());
}

TEST_CASE("poly_mul examples") {
  CHECK(seqlc::poly_mul(P("11"), P("11")) == P("101"));
  CHECK(seqlc::poly_mul(P("111"), P("11")) == P("1001"));
  CHECK(seqlc::poly_mul(BinaryPolynomial::one(), P("1011001")) == P("1011001"));
  CHECK(seqlc::poly_mul(BinaryPolynomial(), P("11")).is_zero());
}

TEST_CASE("poly_divmod examples") {
  auto [q, r] = seqlc::poly_divmod(P("1001"), P("11"));
  CHECK(q == P("111"));
  CHECK(r.is_zero());
  auto [q2, r2] = seqlc::poly_divmod(P("01"), P("101"));
  CHECK(q2.is_zero());
  CHECK(r2 == P("01"));
  auto [q3, r3] = seqlc::poly_divmod(P("01001"), P("01"));
  CHECK(q3 == P("1001"));
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(seqlc::poly_divmod(P("11"), BinaryPolynomial()), seqlc::DivisionByZeroPolynomial);
}

TEST_CASE("poly_gcd examples") {
  CHECK(seqlc::poly_gcd(P("1001"), P("101")) == P("11"));
  CHECK(seqlc::poly_gcd(P("111"), P("11")) == BinaryPolynomial::one());
  CHECK(seqlc::poly_gcd(P("1101"), BinaryPolynomial()) == P("1101"));
  CHECK_THROWS_AS(seqlc::poly_gcd(BinaryPolynomial(), BinaryPolynomial()), std::invalid_argument);
}

TEST_CASE("multiplication agrees with the byte oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng, 200), b = random_poly(rng, 200);
    CHECK(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)));
    CHECK(oracle::from(seqlc::poly_square(a)) == oracle::mul(oracle::from(a), oracle::from(a)));
  }
}

TEST_CASE("divmod recovers the remainder") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, 64), g = random_poly(rng, 64);
    auto r = random_poly(rng, 64);
    if (g.degree() < 1) continue;
    r = r % g;
    const auto [q, rem] = seqlc::poly_divmod(f * g + r, g);
    CHECK(rem == r);
    CHECK(q == f);
    CHECK(oracle::from(rem) == oracle::mod(oracle::from(f * g + r), oracle::from(g)));
  }
}

TEST_CASE("gcd divides both and is symmetric") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto common = random_poly(rng, 10);
    const auto a = random_poly(rng, 40) * common, b = random_poly(rng, 40) * common;
    const auto g = seqlc::poly_gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(g == seqlc::poly_gcd(b, a));
    CHECK((g % common).is_zero());
    const auto x = seqlc::poly_xgcd(a, b);
    CHECK(x.gcd == g);
    CHECK(x.s * a + x.t * b == g);
  }
}

TEST_CASE("is_irreducible") {
  CHECK(seqlc::is_irreducible(P("111")));
  CHECK_FALSE(seqlc::is_irreducible(P("101")));
  CHECK(seqlc::is_irreducible(P("11111")));
  CHECK(seqlc::is_irreducible(P("11")));
  CHECK_THROWS_AS(seqlc::is_irreducible(BinaryPolynomial::one()), std::invalid_argument);
  // every polynomial of degree 1..12 against trial division
  for (std::uint64_t bits = 2; bits < (1u << 13); ++bits) {
    const auto f = BinaryPolynomial::from_word(bits);
    REQUIRE(seqlc::is_irreducible(f) == oracle::irreducible(oracle::from(f)));
  }
}

TEST_CASE("multiplicity") {
  CHECK(seqlc::multiplicity(P("11") * P("11") * P("111"), P("11")) == 2);
  CHECK(seqlc::multiplicity(BinaryPolynomial::one(), P("11")) == 0);
  CHECK(seqlc::multiplicity(BinaryPolynomial::x_pow_plus_one(5), P("11111")) == 1);
  CHECK(seqlc::multiplicity(P("111"), P("11")) == 0);
}

TEST_CASE("factor_xn_plus_1 examples") {
  const auto f3 = seqlc::factor_xn_plus_1(3);
  CHECK(f3.sigma == 0);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0] == seqlc::Factor{P("11"), 1});
  CHECK(f3.factors[1] == seqlc::Factor{P("111"), 1});

  const auto f6 = seqlc::factor_xn_plus_1(6);
  CHECK(f6.sigma == 1);
  REQUIRE(f6.factors.size() == 2);
  CHECK(f6.factors[0] == seqlc::Factor{P("11"), 2});
  CHECK(f6.factors[1] == seqlc::Factor{P("111"), 2});

  const auto f10 = seqlc::factor_xn_plus_1(10);
  CHECK(f10.sigma == 1);
  REQUIRE(f10.factors.size() == 2);
  CHECK(f10.factors[0] == seqlc::Factor{P("11"), 2});
  CHECK(f10.factors[1] == seqlc::Factor{P("11111"), 2});
  // trial-division oracle
  const auto ref = oracle::factor(oracle::from(BinaryPolynomial::x_pow_plus_one(10)));
  REQUIRE(ref.size() == 2);
  CHECK(oracle::to(ref[1].first) == P("11111"));
  CHECK(ref[1].second == 2);

  CHECK(seqlc::factor_xn_plus_1(1).factors == std::vector<seqlc::Factor>{{P("11"), 1}});
}

TEST_CASE("factor_xn_plus_1 reconstructs x^n + 1 for n in 1..512") {
  for (int n = 1; n <= 512; ++n) {
    const auto fl = seqlc::factor_xn_plus_1(n);
    const int sigma = std::countr_zero(static_cast<unsigned>(n));
    REQUIRE(fl.sigma == sigma);
    REQUIRE(fl.product() == BinaryPolynomial::x_pow_plus_one(n));
    for (std::size_t i = 0; i < fl.factors.size(); ++i) {
      const auto& f = fl.factors[i];
      REQUIRE(f.multiplicity == (1 << sigma));
      REQUIRE(seqlc::is_irreducible(f.poly));
      if (i > 0) REQUIRE(fl.factors[i - 1].poly < f.poly);
    }
  }
}

TEST_CASE("factor_xn_plus_1 matches trial division for small n") {
  for (int n = 1; n <= 40; ++n) {
    const auto fl = seqlc::factor_xn_plus_1(n);
    const auto ref = oracle::factor(oracle::from(BinaryPolynomial::x_pow_plus_one(n)));
    REQUIRE(fl.factors.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(oracle::to(ref[i].first) == fl.factors[i].poly);
      CHECK(ref[i].second == fl.factors[i].multiplicity);
    }
  }
}

TEST_CASE("general factorization") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 30);
    if (f.degree() < 1) continue;
    const auto fl = seqlc::factor(f);
    CHECK(fl.product() == f);
    for (const auto& fac : fl.factors) CHECK(seqlc::is_irreducible(fac.poly));
  }
}

TEST_CASE("sum of h deg p equals deg H for divisors of x^n + 1") {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 60; ++n) {
    const auto fl = seqlc::factor_xn_plus_1(n);
    BinaryPolynomial H = BinaryPolynomial::one();
    for (const auto& f : fl.factors) {
      const int e = static_cast<int>(rng() % (f.multiplicity + 1));
      for (int k = 0; k < e; ++k) H = H * f.poly;
    }
    int total = 0;
    for (const auto& f : fl.factors) total += seqlc::multiplicity(H, f.poly) * f.poly.degree();
    CHECK(total == H.degree());
  }
}

TEST_CASE("reciprocal and derivative") {
  CHECK(P("1101").reversed() == P("1011"));
  CHECK(P("011").reversed() == P("11"));
  CHECK(P("11").reversed(3) == P("0011"));
  CHECK(P("1111").derivative() == P("101"));
  CHECK(P("11").eval_at_one() == false);
  CHECK(P("111").eval_at_one() == true);
}

TEST_CASE("powmod against repeated multiplication") {
  const auto mod = P("1100000001");  // x^9 + x + 1
  BinaryPolynomial acc = BinaryPolynomial::one();
  const auto base = P("0111");
  for (std::uint64_t e = 0; e < 60; ++e) {
    CHECK(seqlc::poly_powmod(base, e, mod) == acc);
    acc = (acc * base) % mod;
  }
  CHECK(seqlc::x_pow_two_pow_mod(3, mod) == seqlc::poly_powmod(P("01"), 8, mod));
}
