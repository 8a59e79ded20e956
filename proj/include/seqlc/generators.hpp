#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seqlc/errors.hpp"
#include "seqlc/gf2poly.hpp"
#include "seqlc/numtheory.hpp"

namespace seqlc {

/// Bit sequences are stored one bit per byte (values 0/1). Mathematical
/// indexing is 1-based (c_1, b_1, ...); element k of a Bits vector holds
/// term k + 1.
using Bits = std::vector<std::uint8_t>;

/// Registers longer than this are rejected by the streaming generators.
inline constexpr int kMaxRegisterLength = 64;
/// Periods at or below this are materialized when an exact value is needed.
inline constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 24;

// ---------------------------------------------------------------------------
// LFSR

/// Fibonacci LFSR with characteristic polynomial `feedback` of degree L:
/// s_{t+L} = sum_{i<L} f_i s_{t+i}. The state is the first L output bits.
struct LfsrSpec {
  BinaryPolynomial feedback;
  Bits state;
};

/// Throws std::invalid_argument for a malformed spec.
void validate(const LfsrSpec& spec);
/// True iff f is primitive over GF(2) (degree 1..64).
bool is_primitive(const BinaryPolynomial& f);
/// Minimal period of the output; 2^L - 1 for primitive feedback.
u128 lfsr_period(const LfsrSpec& spec);

class LfsrStream {
public:
  explicit LfsrStream(const LfsrSpec& spec);
  /// Current output bit (s_t), then advances.
  std::uint8_t next();
  /// Window s_t .. s_{t+L-1} as a word, bit i = s_{t+i}.
  std::uint64_t window() const noexcept { return window_; }
  /// Steps back one position (uses f_0 = 1).
  void previous();

private:
  int length_;
  std::uint64_t taps_;  // f_0 .. f_{L-1}
  std::uint64_t window_;
};

Bits lfsr_sequence(const LfsrSpec& spec, std::size_t count);

// ---------------------------------------------------------------------------
// FCSR

/// Binary FCSR in arithmetic form: b_i = (a * 2^-i mod q) mod 2, i >= 1.
struct FcsrSpec {
  u128 q = 3;
  u128 a = 1;
};

void validate(const FcsrSpec& spec);
/// ord_q(2).
u128 fcsr_period(const FcsrSpec& spec);
/// b_i for i >= 0 (b_0 = a mod 2, equal to b_period).
std::uint8_t fcsr_bit(const FcsrSpec& spec, u128 i);

class FcsrStream {
public:
  explicit FcsrStream(const FcsrSpec& spec);
  /// Advances to the next term and returns it.
  std::uint8_t advance();
  std::uint8_t current() const noexcept { return static_cast<std::uint8_t>(x_ & 1); }

private:
  u128 q_;
  u128 x_;
};

Bits fcsr_sequence(const FcsrSpec& spec, std::size_t count);

// ---------------------------------------------------------------------------
// Clock control

/// Maps the LFSR window to a step. The control symbol is formed from the
/// window bits at `taps` (first tap most significant); table[symbol] is the
/// step size.
struct StepMap {
  std::vector<int> taps;
  std::vector<std::uint64_t> table;

  std::size_t symbol(std::uint64_t window) const noexcept {
    std::size_t s = 0;
    for (int t : taps) s = (s << 1) | ((window >> t) & 1);
    return s;
  }
  std::uint64_t step(std::uint64_t window) const { return table.at(symbol(window)); }

  /// step = 1 + symbol over the given taps: (0) gives 1 + bit, (a, b) gives
  /// 1 + 2 bit_a + bit_b.
  static StepMap one_plus_symbol(std::vector<int> taps);
};

struct LfsrControl {
  LfsrSpec lfsr;
  StepMap map;
};

/// A periodic step sequence given explicitly (one period).
struct ExplicitSteps {
  std::vector<std::uint64_t> steps;
};

/// A periodic controlled bit sequence given explicitly (one period, b_1 first).
struct ExplicitBits {
  Bits bits;
};

using ControlSpec = std::variant<LfsrControl, ExplicitSteps>;
using ControlledSpec = std::variant<LfsrSpec, FcsrSpec, ExplicitBits>;

struct ClockedSpec {
  ControlSpec control;
  ControlledSpec controlled;
};

/// Throws std::invalid_argument for structural errors.
void validate(const ClockedSpec& spec);
/// Non-fatal observations (currently: zero step sizes).
std::vector<std::string> warnings(const ClockedSpec& spec);

/// Minimal period m of the step sequence.
u128 control_period(const ClockedSpec& spec);
/// Minimal period n of the controlled sequence.
u128 controlled_period(const ClockedSpec& spec);
/// S = s_m, the sum of the steps over one control period.
u128 step_sum(const ClockedSpec& spec);

/// Streams steps f_L(a_1), f_L(a_2), ...
class ControlStream {
public:
  explicit ControlStream(const ControlSpec& spec);
  std::uint64_t next();

private:
  const ControlSpec* spec_;
  std::size_t index_ = 0;
  std::optional<LfsrStream> lfsr_;
};

/// Streams the controlled sequence starting at b_0.
class ControlledStream {
public:
  explicit ControlledStream(const ControlledSpec& spec);
  std::uint8_t current() const noexcept { return current_; }
  void advance(std::uint64_t count = 1);

private:
  const ControlledSpec* spec_;
  std::optional<LfsrStream> lfsr_;
  std::optional<FcsrStream> fcsr_;
  std::size_t index_ = 0;
  std::uint8_t current_ = 0;
};

/// One period of the step sequence (throws InfeasibleError above the limit).
std::vector<std::uint64_t> control_steps_period(const ClockedSpec& spec, std::uint64_t limit = kMaterializeLimit);
/// b_1 .. b_n for one period n (throws InfeasibleError above the limit).
Bits controlled_period_bits(const ClockedSpec& spec, std::uint64_t limit = kMaterializeLimit);

/// (s_1, ..., s_k), s_t = sum of the first t steps.
std::vector<std::uint64_t> cumulative_steps(const ClockedSpec& spec, std::size_t k);
/// c_1 .. c_count with c_t = b_{s_t}.
Bits clocked_sequence(const ClockedSpec& spec, std::size_t count);

/// Smallest T with seq[i + T] == seq[i] for every probed i, among T with
/// 2T <= seq.size(). Throws InsufficientTermsError when none qualifies.
template <class T>
std::size_t minimal_period(const std::vector<T>& seq) {
  for (std::size_t p = 1; 2 * p <= seq.size(); ++p) {
    if (std::equal(seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end(), seq.begin())) return p;
  }
  throw InsufficientTermsError("sequence too short to certify a period (" + std::to_string(seq.size()) + " terms)");
}

/// Smallest divisor T of `known_period` that is a period of seq; seq must
/// hold at least 2 * known_period terms.
template <class T>
std::uint64_t minimal_period_dividing(const std::vector<T>& seq, std::uint64_t known_period) {
  if (known_period == 0 || seq.size() < 2 * known_period)
    throw InsufficientTermsError("need at least 2 * period terms");
  for (std::uint64_t d = 1; d <= known_period; ++d) {
    if (known_period % d != 0) continue;
    if (std::equal(seq.begin() + static_cast<std::ptrdiff_t>(d), seq.end(), seq.begin())) return d;
  }
  return known_period;
}

}  // namespace seqlc
