#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seqlc/analysis.hpp"
#include "seqlc/bound.hpp"

using namespace seqlc;

namespace {

BinaryPolynomial P(const char* s) { return BinaryPolynomial::parse(s); }

ClockedSpec toy() { return {ExplicitSteps{{1, 2}}, ExplicitBits{{0, 0, 0, 1}}}; }

ClockedSpec desk_lifi() {
  return {LfsrControl{LfsrSpec{P("1101"), {1, 0, 0}}, StepMap::one_plus_symbol({0})}, FcsrSpec{11, 1}};
}

BoundOptions exact() {
  BoundOptions o;
  o.exact = true;
  return o;
}

}  // namespace

TEST_CASE("toy bound") {
  const BoundReport r = compute_bound(toy(), exact());
  CHECK(r.n == 4);
  CHECK(r.m == 2);
  CHECK(r.s_m == 3);
  CHECK(r.v == 3);
  CHECK(r.sigma == 2);
  CHECK(r.bound == 4);
  CHECK(r.exact_lc == 7);
  CHECK(r.period == 8);
  CHECK(r.upper_bound == 8);
  CHECK_NOTHROW(check_report_invariants(r));
  // independent: BM straight on two periods of the keystream
  CHECK(berlekamp_massey(clocked_sequence(toy(), 16)).complexity == 7);
}

TEST_CASE("desk-scale LIFI bound") {
  const BoundReport r = compute_bound(desk_lifi(), exact());
  CHECK(r.m == 7);
  CHECK(r.n == 10);
  CHECK(r.s_m == 11);
  CHECK(r.bound == 30);
  CHECK(r.exact_lc == 33);
  CHECK(r.period == 70);
  CHECK(r.upper_bound == 42);
  CHECK(*r.exact_lc >= r.bound);
  const Bits c = clocked_sequence(desk_lifi(), 140);
  CHECK(oracle::rank(oracle::circulant(Bits(c.begin(), c.begin() + 70))) == 33);
  const auto j = to_json(r);
  CHECK(j["bound"] == 30);
  CHECK(j["exact_lc"] == 33);
  CHECK(j.contains("tightness"));
}

TEST_CASE("zero controlled sequence") {
  const ClockedSpec z{ExplicitSteps{{1, 2}}, ExplicitBits{{0, 0, 0}}};
  const BoundReport r = compute_bound(z, exact());
  CHECK(r.bound == 0);
  CHECK(r.exact_lc == 0);
  CHECK(r.tightness() == 1.0);
  CHECK(exact_decomposition_check(z).entries.empty());
}

TEST_CASE("gcd precondition names both values") {
  const ClockedSpec bad{ExplicitSteps{{1, 3}}, ExplicitBits{{0, 0, 0, 1}}};
  try {
    compute_bound(bad);
    FAIL("no exception");
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("gcd(4, 4)") != std::string::npos);
  }
}

TEST_CASE("full-scale instance is refused") {
  const ClockedSpec full{LfsrControl{LfsrSpec{smallest_primitive(39), [] {
                                                Bits s(39, 0);
                                                s[0] = 1;
                                                return s;
                                              }()},
                                     lifi_step_map(StepVariant::TwoBit)},
                         FcsrSpec{parse_u128("618970019642690137449609563"), 1}};
  CHECK_THROWS_AS(compute_bound(full), InfeasibleError);
  CHECK_THROWS_AS(exact_decomposition_check(full), InfeasibleError);
}

TEST_CASE("decomposition examples") {
  const auto t = exact_decomposition_check(toy());
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].p == P("11"));
  CHECK(t.entries[0].rank_hat == 4);
  CHECK(t.all_hold());
  CHECK(t.intermediate_bound == 4);

  const auto d = exact_decomposition_check(desk_lifi());
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0].rank_hat == 2);
  CHECK(d.entries[1].rank_hat == 4);
  CHECK(d.all_hold());
  CHECK(d.intermediate_bound == 30);
}

TEST_CASE("random instances: bound <= L(C) <= m L(B), decomposition holds") {
  SweepFamily fam;
  fam.m_min = 1;
  fam.m_max = 10;
  fam.n_min = 1;
  fam.n_max = 24;
  const auto specs = sweep_instances(fam, 300, 71);
  REQUIRE(specs.size() == 300);
  for (const auto& spec : specs) {
    const BoundReport r = compute_bound(spec, exact());
    check_report_invariants(r);
    REQUIRE(r.bound <= *r.exact_lc);
    REQUIRE(*r.exact_lc <= *r.upper_bound);
    // exact LC from an independent rank computation
    const Bits c = clocked_sequence(spec, static_cast<std::size_t>(*r.period));
    REQUIRE(oracle::rank(oracle::circulant(c)) == static_cast<int>(*r.exact_lc));
    if (r.n * r.m <= 1024) {
      const auto d = exact_decomposition_check(spec);
      REQUIRE(d.all_hold());
      REQUIRE(d.intermediate_bound == r.bound);
    }
  }
}

TEST_CASE("constant step: bound equals L(B)") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 50; ++i) {
    Bits b(1 + rng() % 30);
    for (auto& x : b) x = rng() & 1;
    const ClockedSpec spec{ExplicitSteps{{1}}, ExplicitBits{b}};
    const BoundReport r = compute_bound(spec, exact());
    const auto lb = static_cast<std::uint64_t>(periodic_linear_complexity(Bits(b.begin(), b.begin() + r.n)).complexity);
    REQUIRE(r.bound == lb);
    REQUIRE(r.exact_lc == lb);
  }
}

TEST_CASE("sweep determinism and format") {
  SweepFamily fam;
  const auto a = tightness_sweep(fam, 40, 9, 4);
  const auto b = tightness_sweep(fam, 40, 9, 1);
  CHECK(sweep_csv(a) == sweep_csv(b));
  CHECK(sweep_csv(tightness_sweep(fam, 40, 10, 2)) != sweep_csv(a));
  CHECK(sweep_csv({}) == "m,n,s_m,bound,exact_lc,upper_bound,tightness\n");
  CHECK(tightness_sweep(fam, 0, 1).empty());
  for (const auto& r : a) {
    CHECK(r.bound <= r.exact_lc);
    CHECK(r.exact_lc <= r.upper_bound);
  }
  SweepFamily empty = fam;
  empty.n_min = 5;
  empty.n_max = 4;
  CHECK_THROWS_AS(tightness_sweep(empty, 3, 1), PreconditionError);
  SweepFamily constant = fam;
  constant.constant_step = true;
  for (const auto& r : tightness_sweep(constant, 20, 3)) {
    CHECK(r.m == 1);
    CHECK(r.bound == r.exact_lc);
  }
}

TEST_CASE("smallest primitive polynomials") {
  CHECK(smallest_primitive(3) == P("1101"));
  CHECK(smallest_primitive(4) == P("11001"));
  CHECK(smallest_primitive(39) == P("1000100000000000000000000000000000000001"));
}

TEST_CASE("validate_lifi_params examples") {
  const auto ok = validate_lifi_params(3, 11);
  CHECK(ok.all_passed());
  const auto seven = validate_lifi_params(3, 7);
  CHECK_FALSE(seven.all_passed());
  bool saw = false;
  for (const auto& c : seven.checks)
    if (c.name == "two_primitive_mod_q") saw = !c.passed;
  CHECK(saw);
  const auto nine = validate_lifi_params(3, 9);
  CHECK_FALSE(nine.all_passed());
  CHECK(to_json(nine).dump().find("(q-1)/2 not prime") != std::string::npos);
  // q = 23: 2 has order 11, not 22
  CHECK_FALSE(validate_lifi_params(3, 23).all_passed());
  const auto full = validate_lifi_params(39, parse_u128("618970019642690137449609563"), StepVariant::TwoBit);
  CHECK(full.all_passed());
}
