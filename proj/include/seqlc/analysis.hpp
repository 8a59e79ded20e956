#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "seqlc/generators.hpp"
#include "seqlc/gf2poly.hpp"

namespace seqlc {

struct LinearComplexityResult {
  int complexity = 0;
  /// Characteristic polynomial H of the shortest recurrence, degree = complexity.
  /// For a periodic input of period n fed with 2n terms, H | x^n + 1.
  BinaryPolynomial min_poly = BinaryPolynomial::one();
  std::size_t consumed = 0;
};

/// Shortest LFSR generating the prefix.
LinearComplexityResult berlekamp_massey(std::span<const std::uint8_t> prefix);

/// Berlekamp-Massey on 2n terms of the periodic extension of one period.
LinearComplexityResult periodic_linear_complexity(std::span<const std::uint8_t> period);

/// Linear complexity as the GF(2) rank of the circulant of one period.
int lc_via_circulant(std::span<const std::uint8_t> period);

/// Minimal polynomial of a periodic sequence from gcd(A(x), x^n + 1), where
/// A is the period read as a polynomial: H is the reciprocal of
/// (x^n + 1) / gcd.
BinaryPolynomial periodic_minimal_polynomial(std::span<const std::uint8_t> period);

/// One period (n terms) of B with b_i = a_{s + l(i-1)}, a read periodically
/// and 1-based. start >= 1.
Bits sample(std::span<const std::uint8_t> period, std::uint64_t start, std::uint64_t step);

/// m * L(B). Requires gcd(s_m, n) = 1 (PreconditionError otherwise).
std::uint64_t interleaving_upper_bound(const ClockedSpec& spec, std::uint64_t limit = kMaterializeLimit);

}  // namespace seqlc
