#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "seqlc/generators.hpp"
#include "seqlc/gf2poly.hpp"

namespace seqlc {

/// Sizes beyond which the analysis operations refuse to run.
struct AnalysisLimits {
  std::uint64_t max_n = std::uint64_t{1} << 16;
  std::uint64_t max_m = std::uint64_t{1} << 20;
  /// Keystream terms fed to Berlekamp-Massey for the exact LC (2mn).
  std::uint64_t max_exact_terms = std::uint64_t{1} << 18;
  /// n * m ceiling for exact_decomposition_check.
  std::uint64_t max_decomposition = 4096;
};

struct BoundOptions {
  /// Also compute L(C) by Berlekamp-Massey on 2mn keystream bits.
  bool exact = false;
  /// Compute g_t for every factor, not only those with h_t > 0.
  bool all_factors = false;
  AnalysisLimits limits{};
};

struct FactorRecord {
  BinaryPolynomial p;
  int degree = 0;
  int h = 0;
  std::uint64_t g = 0;
  bool g_computed = false;
  std::uint64_t contribution = 0;
};

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t s_m = 0;
  std::uint64_t v = 0;
  int sigma = 0;
  std::vector<FactorRecord> factors;
  /// Minimal polynomial of C^1 = (c_{1+mi}).
  BinaryPolynomial h_poly = BinaryPolynomial::one();
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> exact_lc;
  /// m * L(B).
  std::optional<std::uint64_t> upper_bound;
  /// Minimal keystream period, measured alongside the exact LC.
  std::optional<std::uint64_t> period;

  /// bound / exact_lc; 1 when both are zero.
  std::optional<double> tightness() const;
};

/// The lower-bound pipeline: factor x^n + 1, sample C^1, read h_t off its
/// minimal polynomial and g_t off gcd(E_t, J_t) over F2[x]/(p_t).
/// PreconditionError when gcd(s_m, n) != 1; InfeasibleError past the limits.
BoundReport compute_bound(const ClockedSpec& spec, const BoundOptions& options = {});

/// Throws std::logic_error if a report breaks its own invariants.
void check_report_invariants(const BoundReport& report);

struct DecompositionEntry {
  int t = 0;  // 1-based factor index
  BinaryPolynomial p;
  int rank_hat = 0;
  /// Same rank from the materialized matrix F^1(C) with C the companion of p^(2^sigma).
  int rank_matrix = 0;
  int expected = 0;  // h_t * deg p_t
  std::uint64_t g = 0;
  bool holds() const { return rank_hat == expected && rank_matrix == rank_hat; }
};

struct DecompositionReport {
  std::vector<DecompositionEntry> entries;  // factors with h_t > 0 or rank_hat > 0
  /// sum rank_hat_t * (m - g_t), the intermediate lower bound.
  std::uint64_t intermediate_bound = 0;
  bool all_hold() const;
};

/// Per-factor rank of the sampled block against h_t * deg p_t. Requires
/// n * m <= limits.max_decomposition (InfeasibleError otherwise).
DecompositionReport exact_decomposition_check(const ClockedSpec& spec, const AnalysisLimits& limits = {});

// ---------------------------------------------------------------------------
// Sweeps

struct SweepFamily {
  std::uint64_t m_min = 2, m_max = 8;
  std::uint64_t n_min = 3, n_max = 16;
  std::uint64_t max_step = 4;
  /// Every step equal to 1 (m collapses to 1, c = b).
  bool constant_step = false;
};

struct SweepRow {
  std::uint64_t m = 0, n = 0, s_m = 0, bound = 0, exact_lc = 0, upper_bound = 0;
  double tightness = 1.0;
};

/// Random explicit instances with gcd(s_m, n) = 1. Instances are drawn
/// serially from `seed`; evaluation runs on up to `threads` workers
/// (0 = hardware concurrency) and rows come back in instance order.
std::vector<SweepRow> tightness_sweep(const SweepFamily& family, std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads = 0);
/// The instances tightness_sweep evaluates, in order.
std::vector<ClockedSpec> sweep_instances(const SweepFamily& family, std::uint64_t trials, std::uint64_t seed);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// Parameter validation for the LIFI construction

enum class StepVariant {
  OneBit,  // step = 1 + a_t
  TwoBit,  // step = 1 + 2 a_t + a_{t+1}
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct ValidationReport {
  int degree = 0;
  u128 q = 0;
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Smallest primitive polynomial of degree L (ordered by coefficient bits).
BinaryPolynomial smallest_primitive(int degree);
/// The step map of a variant, tapping window offsets 0 (and 1).
StepMap lifi_step_map(StepVariant variant);

ValidationReport validate_lifi_params(int degree, u128 q, StepVariant variant = StepVariant::OneBit,
                                      const std::optional<BinaryPolynomial>& feedback = std::nullopt);

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json to_json(const BoundReport& report);
nlohmann::ordered_json to_json(const DecompositionReport& report);
nlohmann::ordered_json to_json(const ValidationReport& report);

}  // namespace seqlc
