#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seqlc/bound.hpp"
#include "seqlc/generators.hpp"

using namespace seqlc;

namespace {

BinaryPolynomial P(const char* s) { return BinaryPolynomial::parse(s); }

ClockedSpec toy() { return {ExplicitSteps{{1, 2}}, ExplicitBits{{0, 0, 0, 1}}}; }

ClockedSpec desk_lifi() {
  return {LfsrControl{LfsrSpec{P("1101"), {1, 0, 0}}, StepMap::one_plus_symbol({0})}, FcsrSpec{11, 1}};
}

}  // namespace

TEST_CASE("lfsr_sequence examples") {
  const LfsrSpec m3{P("1101"), {1, 0, 0}};
  const Bits s = lfsr_sequence(m3, 28);
  CHECK(oracle::period(s) == 7);
  for (std::size_t i = 0; i + 7 <= s.size(); ++i) CHECK(std::accumulate(s.begin() + i, s.begin() + i + 7, 0) == 4);
  CHECK(lfsr_period(m3) == 7);
  // s_{t+3} = s_t + s_{t+1}
  for (std::size_t t = 0; t + 3 < s.size(); ++t) CHECK(s[t + 3] == (s[t] ^ s[t + 1]));

  const Bits ones = lfsr_sequence({P("11"), {1}}, 10);
  CHECK(std::all_of(ones.begin(), ones.end(), [](auto b) { return b == 1; }));

  const Bits s3 = lfsr_sequence({P("111"), {0, 1}}, 12);
  CHECK(oracle::period(s3) == 3);
  CHECK(s3[0] == 0);
  CHECK(s3[1] == 1);
}

TEST_CASE("lfsr validation") {
  CHECK_THROWS(validate(LfsrSpec{P("1101"), {0, 0, 0}}));
  CHECK_THROWS(validate(LfsrSpec{P("0101"), {1, 0, 0}}));  // constant term 0
  CHECK_THROWS(validate(LfsrSpec{P("1101"), {1, 0}}));
  CHECK_NOTHROW(validate(LfsrSpec{P("101"), {0, 0}}));  // reducible feedback admits the zero state
}

TEST_CASE("primitive LFSRs reach period 2^L - 1") {
  for (int L = 1; L <= 16; ++L) {
    const auto f = smallest_primitive(L);
    Bits state(static_cast<std::size_t>(L), 0);
    state[0] = 1;
    const LfsrSpec spec{f, state};
    const u128 expected = (u128{1} << L) - 1;
    REQUIRE(lfsr_period(spec) == expected);
    LfsrStream st(spec);
    const auto w0 = st.window();
    std::uint64_t t = 0;
    do {
      st.next();
      ++t;
    } while (st.window() != w0);
    REQUIRE(t == static_cast<std::uint64_t>(expected));
  }
}

TEST_CASE("lfsr stream can step back") {
  LfsrStream s({P("1100001"), {1, 0, 1, 1, 0, 0}});
  const auto w = s.window();
  for (int i = 0; i < 5; ++i) s.next();
  for (int i = 0; i < 5; ++i) s.previous();
  CHECK(s.window() == w);
}

TEST_CASE("fcsr_sequence examples") {
  const Bits b = fcsr_sequence({11, 1}, 10);
  CHECK(b == Bits{0, 1, 1, 1, 0, 1, 0, 0, 0, 1});
  for (u128 i = 1; i <= 10; ++i) CHECK(fcsr_bit({11, 1}, i) == b[static_cast<std::size_t>(i - 1)]);
  CHECK(fcsr_bit({11, 1}, 0) == 1);
  const Bits c = fcsr_sequence({11, 10}, 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(c[i] == (b[i] ^ 1));
  CHECK_THROWS(validate(FcsrSpec{12, 1}));
  CHECK_THROWS(validate(FcsrSpec{11, 0}));
  CHECK_THROWS(validate(FcsrSpec{11, 11}));
}

TEST_CASE("l-sequence half-period complement") {
  for (u128 q : {11, 59, 107}) {
    const auto n = static_cast<std::size_t>(fcsr_period({q, 1}));
    CHECK(n == q - 1);
    const Bits b = fcsr_sequence({q, 1}, n);
    for (std::size_t i = 0; i < n / 2; ++i) REQUIRE(b[i + n / 2] == (b[i] ^ 1));
  }
}

TEST_CASE("2 is not primitive mod 23") {
  CHECK(fcsr_period({23, 1}) == 11);
  const Bits b = fcsr_sequence({23, 1}, 11);
  CHECK(minimal_period(fcsr_sequence({23, 1}, 22)) == 11);
  CHECK(std::accumulate(b.begin(), b.end(), 0) != 11);
}

TEST_CASE("full-size FCSR streams by modular arithmetic") {
  const FcsrSpec big{parse_u128("618970019642690137449609563"), 12345};
  FcsrStream s(big);
  for (u128 i = 1; i <= 200; ++i) REQUIRE(s.advance() == fcsr_bit(big, i));
  CHECK(fcsr_period(big) == big.q - 1);
}

TEST_CASE("cumulative steps") {
  CHECK(cumulative_steps(toy(), 4) == std::vector<std::uint64_t>{1, 3, 4, 6});
  const ClockedSpec ones{ExplicitSteps{{1}}, ExplicitBits{{1, 0}}};
  CHECK(cumulative_steps(ones, 5) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(cumulative_steps(desk_lifi(), 7).back() == 11);
  CHECK(step_sum(desk_lifi()) == 11);
  CHECK(control_period(desk_lifi()) == 7);
  CHECK(controlled_period(desk_lifi()) == 10);
}

TEST_CASE("clocked_sequence examples") {
  CHECK(clocked_sequence(toy(), 16) == Bits{0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1});
  const ClockedSpec ident{ExplicitSteps{{1}}, FcsrSpec{11, 1}};
  CHECK(clocked_sequence(ident, 10) == fcsr_sequence({11, 1}, 10));
  const ClockedSpec zero{ExplicitSteps{{1, 2}}, ExplicitBits{{0, 0, 0}}};
  const Bits z = clocked_sequence(zero, 20);
  CHECK(std::all_of(z.begin(), z.end(), [](auto b) { return b == 0; }));
  // LFSR controlled sequence: direct indexing into the stream
  const ClockedSpec lc{ExplicitSteps{{2, 1}}, LfsrSpec{P("1101"), {1, 0, 0}}};
  const Bits b = lfsr_sequence({P("1101"), {1, 0, 0}}, 40);
  const Bits c = clocked_sequence(lc, 10);
  const auto s = cumulative_steps(lc, 10);
  for (std::size_t t = 0; t < 10; ++t) CHECK(c[t] == b[s[t] - 1]);
}

TEST_CASE("minimal_period examples") {
  CHECK(minimal_period(clocked_sequence(toy(), 16)) == 8);
  CHECK(minimal_period(Bits(6, 1)) == 1);
  const Bits c = clocked_sequence(desk_lifi(), 140);
  CHECK(minimal_period_dividing(c, 70) == 70);
  CHECK(minimal_period(c) == 70);
  CHECK_THROWS_AS(minimal_period(Bits{0, 1, 1}), InsufficientTermsError);
}

TEST_CASE("zero steps warn but are accepted") {
  const ClockedSpec spec{ExplicitSteps{{0, 1, 2}}, ExplicitBits{{0, 1, 1, 0, 1}}};
  CHECK_NOTHROW(validate(spec));
  CHECK(warnings(spec).size() == 1);
  CHECK(warnings(toy()).empty());
  CHECK_THROWS(validate(ClockedSpec{ExplicitSteps{{0, 0}}, ExplicitBits{{1}}}));
}

TEST_CASE("step map validation") {
  ClockedSpec s = desk_lifi();
  std::get<LfsrControl>(s.control).map.taps = {3};
  CHECK_THROWS(validate(s));
  std::get<LfsrControl>(s.control).map = StepMap{{0, 0}, {1, 2, 3, 4}};
  CHECK_THROWS(validate(s));
  std::get<LfsrControl>(s.control).map = StepMap{{0}, {1, 2, 3}};
  CHECK_THROWS(validate(s));
  const StepMap two = StepMap::one_plus_symbol({0, 1});
  CHECK(two.table == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(two.step(0b01) == 3);  // bit_0 is the most significant symbol bit
  CHECK(two.step(0b10) == 2);
}

TEST_CASE("period law on a small grid") {
  std::mt19937_64 rng(51);
  int full = 0, coprime = 0;
  for (int t1 = 1; t1 <= 6; ++t1) {
    for (int t2 = 1; t2 <= 10; ++t2) {
      std::vector<std::uint64_t> steps;
      Bits bits;
      ClockedSpec spec;
      do {
        steps.assign(static_cast<std::size_t>(t1), 0);
        for (auto& s : steps) s = rng() % 5;
        bits.assign(static_cast<std::size_t>(t2), 0);
        for (auto& b : bits) b = rng() & 1;
        spec = {ExplicitSteps{steps}, ExplicitBits{bits}};
      } while (std::all_of(steps.begin(), steps.end(), [](auto s) { return s == 0; }) ||
               control_period(spec) != static_cast<u128>(t1) || controlled_period(spec) != static_cast<u128>(t2));
      const Bits c = clocked_sequence(spec, static_cast<std::size_t>(2 * t1 * t2));
      const auto p = minimal_period_dividing(c, static_cast<std::uint64_t>(t1 * t2));
      REQUIRE((t1 * t2) % static_cast<int>(p) == 0);
      if (std::gcd(static_cast<int>(step_sum(spec)), t2) == 1) {
        ++coprime;
        full += p == static_cast<std::uint64_t>(t1 * t2);
      }
    }
  }
  CHECK(full > coprime / 2);
}

TEST_CASE("coprime step sum does not force the full period") {
  // every step is 1 mod 3, so c just walks b once per T2 clocks
  const ClockedSpec a{ExplicitSteps{{1, 4}}, ExplicitBits{{0, 1, 0}}};
  CHECK(control_period(a) == 2);
  CHECK(std::gcd(static_cast<int>(step_sum(a)), 3) == 1);
  CHECK(minimal_period(clocked_sequence(a, 12)) == 3);
  const ClockedSpec b{ExplicitSteps{{2, 1}}, ExplicitBits{{1}}};
  CHECK(minimal_period(clocked_sequence(b, 4)) == 1);
}
