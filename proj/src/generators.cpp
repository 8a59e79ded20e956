#include "seqlc/generators.hpp"

#include <bit>
#include <set>

namespace seqlc {

namespace {

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t feedback_taps(const BinaryPolynomial& f) {
  std::uint64_t taps = 0;
  for (int i = 0; i < f.degree(); ++i) {
    if (f.coeff(i)) taps |= std::uint64_t{1} << i;
  }
  return taps;
}

std::uint64_t pack_state(const Bits& state) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] & 1) w |= std::uint64_t{1} << i;
  }
  return w;
}

// Smallest d | v.size() with v[i] == v[(i + d) mod size] for all i.
template <class T>
std::size_t cyclic_minimal_period(const std::vector<T>& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + d < n && ok; ++i) ok = v[i] == v[i + d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// LFSR

void validate(const LfsrSpec& spec) {
  const int L = spec.feedback.degree();
  if (L < 1) throw std::invalid_argument("LFSR feedback polynomial must have degree >= 1");
  if (L > kMaxRegisterLength) throw std::invalid_argument("LFSR length exceeds 64");
  if (!spec.feedback.coeff(0)) throw std::invalid_argument("LFSR feedback polynomial must have constant term 1");
  if (spec.state.size() != static_cast<std::size_t>(L))
    throw std::invalid_argument("LFSR state has " + std::to_string(spec.state.size()) + " bits, expected " +
                                std::to_string(L));
  for (auto b : spec.state) {
    if (b > 1) throw std::invalid_argument("LFSR state bits must be 0 or 1");
  }
  if (pack_state(spec.state) == 0 && is_primitive(spec.feedback))
    throw std::invalid_argument("all-zero state with primitive feedback");
}

bool is_primitive(const BinaryPolynomial& f) {
  const int L = f.degree();
  if (L < 1 || L > 64) throw std::invalid_argument("primitivity test supports degree 1..64");
  if (!f.coeff(0)) return false;
  if (!is_irreducible(f)) return false;
  const u128 order = (u128{1} << L) - 1;
  if (L == 1) return true;  // x + 1: order 1 = 2^1 - 1
  const BinaryPolynomial one = BinaryPolynomial::one();
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  for (u128 r : distinct_prime_factors(order)) {
    if (poly_powmod(x, static_cast<std::uint64_t>(order / r), f) == one) return false;
  }
  return true;
}

u128 lfsr_period(const LfsrSpec& spec) {
  validate(spec);
  const int L = spec.feedback.degree();
  if (pack_state(spec.state) == 0) return 1;
  if (is_primitive(spec.feedback)) return (u128{1} << L) - 1;
  LfsrStream s(spec);
  const std::uint64_t start = s.window();
  for (std::uint64_t t = 1; t <= kMaterializeLimit; ++t) {
    s.next();
    if (s.window() == start) return t;
  }
  throw InfeasibleError("LFSR period exceeds the simulation limit");
}

LfsrStream::LfsrStream(const LfsrSpec& spec)
    : length_(spec.feedback.degree()), taps_(feedback_taps(spec.feedback)), window_(pack_state(spec.state)) {
  validate(spec);
}

std::uint8_t LfsrStream::next() {
  const auto out = static_cast<std::uint8_t>(window_ & 1);
  const std::uint64_t fb = static_cast<std::uint64_t>(std::popcount(window_ & taps_) & 1);
  window_ = (window_ >> 1) | (fb << (length_ - 1));
  return out;
}

void LfsrStream::previous() {
  // s_{t-1} = s_{t+L-1} + sum_{i=1}^{L-1} f_i s_{t-1+i}
  const std::uint64_t top = (window_ >> (length_ - 1)) & 1;
  const std::uint64_t rest = static_cast<std::uint64_t>(std::popcount(window_ & (taps_ >> 1) & low_mask(length_ - 1)) & 1);
  window_ = ((window_ << 1) | (top ^ rest)) & low_mask(length_);
}

Bits lfsr_sequence(const LfsrSpec& spec, std::size_t count) {
  LfsrStream s(spec);
  Bits out(count);
  for (auto& b : out) b = s.next();
  return out;
}

// ---------------------------------------------------------------------------
// FCSR

void validate(const FcsrSpec& spec) {
  if (spec.q < 3 || (spec.q & 1) == 0) throw std::invalid_argument("FCSR connection integer q must be odd and >= 3");
  if (spec.q >> 127) throw std::invalid_argument("FCSR connection integer exceeds 127 bits");
  if (spec.a == 0 || spec.a >= spec.q) throw std::invalid_argument("FCSR numerator a must satisfy 0 < a < q");
}

u128 fcsr_period(const FcsrSpec& spec) {
  validate(spec);
  return multiplicative_order(2, spec.q);
}

std::uint8_t fcsr_bit(const FcsrSpec& spec, u128 i) {
  const u128 inv2 = (spec.q + 1) / 2;
  return static_cast<std::uint8_t>(mulmod(spec.a, powmod(inv2, i, spec.q), spec.q) & 1);
}

FcsrStream::FcsrStream(const FcsrSpec& spec) : q_(spec.q), x_(spec.a) { validate(spec); }

std::uint8_t FcsrStream::advance() {
  // x * 2^-1 mod q
  x_ = (x_ & 1) ? (x_ + q_) >> 1 : x_ >> 1;
  return current();
}

Bits fcsr_sequence(const FcsrSpec& spec, std::size_t count) {
  FcsrStream s(spec);
  Bits out(count);
  for (auto& b : out) b = s.advance();
  return out;
}

// ---------------------------------------------------------------------------
// Clock control

StepMap StepMap::one_plus_symbol(std::vector<int> taps) {
  StepMap m;
  m.table.resize(std::size_t{1} << taps.size());
  for (std::size_t s = 0; s < m.table.size(); ++s) m.table[s] = 1 + s;
  m.taps = std::move(taps);
  return m;
}

void validate(const ClockedSpec& spec) {
  if (const auto* c = std::get_if<LfsrControl>(&spec.control)) {
    validate(c->lfsr);
    const int L = c->lfsr.feedback.degree();
    std::set<int> seen;
    for (int t : c->map.taps) {
      if (t < 0 || t >= L) throw std::invalid_argument("step-map tap " + std::to_string(t) + " outside the register");
      if (!seen.insert(t).second) throw std::invalid_argument("duplicate step-map tap " + std::to_string(t));
    }
    if (c->map.taps.size() > 16) throw std::invalid_argument("at most 16 step-map taps");
    if (c->map.table.size() != (std::size_t{1} << c->map.taps.size()))
      throw std::invalid_argument("step-map table needs 2^taps entries");
    if (std::all_of(c->map.table.begin(), c->map.table.end(), [](auto s) { return s == 0; }))
      throw std::invalid_argument("step map must have at least one positive step");
  } else {
    const auto& steps = std::get<ExplicitSteps>(spec.control).steps;
    if (steps.empty()) throw std::invalid_argument("explicit step list is empty");
    if (std::all_of(steps.begin(), steps.end(), [](auto s) { return s == 0; }))
      throw std::invalid_argument("step list must have at least one positive step");
  }
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExplicitBits>) {
          if (c.bits.empty()) throw std::invalid_argument("explicit controlled sequence is empty");
          for (auto b : c.bits) {
            if (b > 1) throw std::invalid_argument("controlled bits must be 0 or 1");
          }
        } else {
          validate(c);
        }
      },
      spec.controlled);
}

std::vector<std::string> warnings(const ClockedSpec& spec) {
  std::vector<std::string> out;
  bool zero = false;
  if (const auto* c = std::get_if<LfsrControl>(&spec.control)) {
    zero = std::find(c->map.table.begin(), c->map.table.end(), 0u) != c->map.table.end();
  } else {
    const auto& steps = std::get<ExplicitSteps>(spec.control).steps;
    zero = std::find(steps.begin(), steps.end(), 0u) != steps.end();
  }
  if (zero) out.emplace_back("step size 0 repeats keystream symbols and weakens output statistics");
  return out;
}

u128 control_period(const ClockedSpec& spec) {
  if (const auto* c = std::get_if<LfsrControl>(&spec.control)) {
    const u128 p = lfsr_period(c->lfsr);
    if (p > kMaterializeLimit) return p;
    ControlStream s(spec.control);
    std::vector<std::uint64_t> steps(static_cast<std::size_t>(p));
    for (auto& v : steps) v = s.next();
    return cyclic_minimal_period(steps);
  }
  return cyclic_minimal_period(std::get<ExplicitSteps>(spec.control).steps);
}

u128 controlled_period(const ClockedSpec& spec) {
  return std::visit(
      [](const auto& c) -> u128 {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ExplicitBits>) {
          return cyclic_minimal_period(c.bits);
        } else if constexpr (std::is_same_v<T, LfsrSpec>) {
          return lfsr_period(c);
        } else {
          return fcsr_period(c);
        }
      },
      spec.controlled);
}

u128 step_sum(const ClockedSpec& spec) {
  const u128 m = control_period(spec);
  if (m <= kMaterializeLimit) {
    u128 sum = 0;
    ControlStream s(spec.control);
    for (u128 i = 0; i < m; ++i) sum += s.next();
    return sum;
  }
  // Only reachable for a primitive LFSR: its window runs through every
  // nonzero L-bit state once per period.
  const auto& c = std::get<LfsrControl>(spec.control);
  const int L = c.lfsr.feedback.degree();
  const int K = static_cast<int>(c.map.taps.size());
  u128 table_sum = 0;
  for (auto s : c.map.table) table_sum += s;
  return (table_sum << (L - K)) - c.map.table[0];
}

ControlStream::ControlStream(const ControlSpec& spec) : spec_(&spec) {
  if (const auto* c = std::get_if<LfsrControl>(&spec)) lfsr_.emplace(c->lfsr);
}

std::uint64_t ControlStream::next() {
  if (lfsr_) {
    const auto& c = std::get<LfsrControl>(*spec_);
    const std::uint64_t step = c.map.step(lfsr_->window());
    lfsr_->next();
    return step;
  }
  const auto& steps = std::get<ExplicitSteps>(*spec_).steps;
  const std::uint64_t step = steps[index_];
  index_ = (index_ + 1) % steps.size();
  return step;
}

ControlledStream::ControlledStream(const ControlledSpec& spec) : spec_(&spec) {
  if (const auto* l = std::get_if<LfsrSpec>(&spec)) {
    lfsr_.emplace(*l);
    lfsr_->previous();
    current_ = static_cast<std::uint8_t>(lfsr_->window() & 1);
  } else if (const auto* f = std::get_if<FcsrSpec>(&spec)) {
    fcsr_.emplace(*f);
    current_ = fcsr_->current();
  } else {
    const auto& bits = std::get<ExplicitBits>(spec).bits;
    if (bits.empty()) throw std::invalid_argument("explicit controlled sequence is empty");
    current_ = bits.back();  // b_0 = b_n
  }
}

void ControlledStream::advance(std::uint64_t count) {
  if (lfsr_) {
    for (std::uint64_t i = 0; i < count; ++i) lfsr_->next();
    current_ = static_cast<std::uint8_t>(lfsr_->window() & 1);
  } else if (fcsr_) {
    for (std::uint64_t i = 0; i < count; ++i) fcsr_->advance();
    current_ = fcsr_->current();
  } else {
    const auto& bits = std::get<ExplicitBits>(*spec_).bits;
    index_ = static_cast<std::size_t>((index_ + count) % bits.size());
    current_ = bits[(index_ + bits.size() - 1) % bits.size()];
  }
}

std::vector<std::uint64_t> control_steps_period(const ClockedSpec& spec, std::uint64_t limit) {
  const u128 m = control_period(spec);
  if (m > limit) throw InfeasibleError("control period " + to_string(m) + " exceeds the materialization limit");
  ControlStream s(spec.control);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m));
  for (auto& v : out) v = s.next();
  return out;
}

Bits controlled_period_bits(const ClockedSpec& spec, std::uint64_t limit) {
  const u128 n = controlled_period(spec);
  if (n > limit) throw InfeasibleError("controlled period " + to_string(n) + " exceeds the materialization limit");
  ControlledStream s(spec.controlled);
  Bits out(static_cast<std::size_t>(n));
  for (auto& b : out) {
    s.advance();
    b = s.current();
  }
  return out;
}

std::vector<std::uint64_t> cumulative_steps(const ClockedSpec& spec, std::size_t k) {
  if (k < 1) throw std::invalid_argument("cumulative_steps needs k >= 1");
  ControlStream s(spec.control);
  std::vector<std::uint64_t> out(k);
  std::uint64_t sum = 0;
  for (auto& v : out) v = sum += s.next();
  return out;
}

Bits clocked_sequence(const ClockedSpec& spec, std::size_t count) {
  validate(spec);
  ControlStream control(spec.control);
  ControlledStream controlled(spec.controlled);
  Bits out(count);
  for (auto& c : out) {
    controlled.advance(control.next());
    c = controlled.current();
  }
  return out;
}

}  // namespace seqlc
