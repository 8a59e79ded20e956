#include "seqlc/analysis.hpp"

#include <bit>
#include <numeric>

#include "seqlc/gf2linalg.hpp"

namespace seqlc {

namespace {

using Word = std::uint64_t;

// Bits of `packed` starting at bit `pos`, 64 at a time; zeros past the end.
Word bits_at(const std::vector<Word>& packed, std::size_t pos) {
  const std::size_t w = pos / 64, b = pos % 64;
  Word lo = w < packed.size() ? packed[w] : 0;
  if (b == 0) return lo;
  const Word hi = w + 1 < packed.size() ? packed[w + 1] : 0;
  return (lo >> b) | (hi << (64 - b));
}

}  // namespace

LinearComplexityResult berlekamp_massey(std::span<const std::uint8_t> prefix) {
  const std::size_t N = prefix.size();
  // reversed[k] = s_{N-1-k}, so the window s_i, s_{i-1}, ..., s_{i-L} is
  // contiguous starting at bit N-1-i.
  std::vector<Word> reversed(N / 64 + 2, 0);
  for (std::size_t k = 0; k < N; ++k) {
    if (prefix[N - 1 - k] & 1) reversed[k / 64] |= Word{1} << (k % 64);
  }

  BinaryPolynomial C = BinaryPolynomial::one();
  BinaryPolynomial B = BinaryPolynomial::one();
  int L = 0;
  int shift = 1;
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t off = N - 1 - i;
    int parity = 0;
    const auto& cw = C.words();
    for (std::size_t w = 0; w < cw.size(); ++w) parity ^= std::popcount(cw[w] & bits_at(reversed, off + 64 * w)) & 1;
    if (parity == 0) {
      ++shift;
    } else if (2 * L <= static_cast<int>(i)) {
      BinaryPolynomial T = C;
      C.add_shifted(B, shift);
      L = static_cast<int>(i) + 1 - L;
      B = std::move(T);
      shift = 1;
    } else {
      C.add_shifted(B, shift);
      ++shift;
    }
  }
  return {L, C.reversed(L), N};
}

LinearComplexityResult periodic_linear_complexity(std::span<const std::uint8_t> period) {
  Bits doubled(period.begin(), period.end());
  doubled.insert(doubled.end(), period.begin(), period.end());
  return berlekamp_massey(doubled);
}

int lc_via_circulant(std::span<const std::uint8_t> period) {
  return static_cast<int>(rank(circulant(period, true)));
}

BinaryPolynomial periodic_minimal_polynomial(std::span<const std::uint8_t> period) {
  const int n = static_cast<int>(period.size());
  if (n == 0) throw std::invalid_argument("empty period");
  const BinaryPolynomial a = BinaryPolynomial::from_coefficients(Bits(period.begin(), period.end()));
  const BinaryPolynomial xn1 = BinaryPolynomial::x_pow_plus_one(n);
  const BinaryPolynomial connection = xn1 / poly_gcd(a, xn1);
  return connection.reversed(connection.degree());
}

Bits sample(std::span<const std::uint8_t> period, std::uint64_t start, std::uint64_t step) {
  const std::uint64_t n = period.size();
  if (n == 0) throw std::invalid_argument("empty period");
  if (start < 1) throw std::invalid_argument("sampling start is 1-based");
  Bits out(n);
  std::uint64_t idx = (start - 1) % n;
  const std::uint64_t stride = step % n;
  for (auto& b : out) {
    b = period[idx];
    idx = (idx + stride) % n;
  }
  return out;
}

std::uint64_t interleaving_upper_bound(const ClockedSpec& spec, std::uint64_t limit) {
  const u128 m = control_period(spec);
  const u128 n = controlled_period(spec);
  const u128 s = step_sum(spec);
  if (gcd_u128(s, n) != 1)
    throw PreconditionError("gcd(s_m, n) = gcd(" + to_string(s) + ", " + to_string(n) + ") != 1");
  const Bits b = controlled_period_bits(spec, limit);
  const auto lb = static_cast<u128>(periodic_linear_complexity(b).complexity);
  const u128 bound = m * lb;
  if (bound >> 64) throw InfeasibleError("upper bound exceeds 64 bits");
  return static_cast<std::uint64_t>(bound);
}

}  // namespace seqlc
