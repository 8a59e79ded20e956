#include "seqlc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqlc/analysis.hpp"
#include "seqlc/bound.hpp"
#include "seqlc/config.hpp"
#include "seqlc/seqio.hpp"

namespace seqlc::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Failure carrying its exit code up to run().
struct Exit {
  int code;
  std::string message;
};

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

void emit_to(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string config, out;
  std::uint64_t count = 0;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const SpecConfig cfg = load_config(a.config);
  std::optional<u128> period;
  const u128 m = control_period(cfg.spec), n = controlled_period(cfg.spec);
  if (gcd_u128(step_sum(cfg.spec), n) == 1 && m <= ~u128{0} / n) period = m * n;
  const Bits bits = clocked_sequence(cfg.spec, static_cast<std::size_t>(a.count));
  emit_to(a.out, out, format_sequence(bits, period));
  return kOk;
}

struct LcArgs {
  std::string in, config, method = "bm";
  std::optional<std::uint64_t> period;
};

int cmd_lc(const LcArgs& a, std::ostream& out, std::ostream& err) {
  if (a.in.empty() == a.config.empty()) throw Exit{kConfigError, "give exactly one of --in and --config"};
  Bits bits;
  std::optional<std::uint64_t> period = a.period;
  if (!a.in.empty()) {
    SequenceFile f = read_sequence_file(a.in);
    if (!period && f.period) {
      if (*f.period >> 64) throw Exit{kConfigError, "declared period does not fit in 64 bits"};
      period = static_cast<std::uint64_t>(*f.period);
    }
    bits = std::move(f.bits);
  } else {
    const SpecConfig cfg = load_config(a.config);
    const u128 full = control_period(cfg.spec) * controlled_period(cfg.spec);
    if (full > cfg.limits.max_exact_terms / 2)
      throw InfeasibleError("keystream period bound " + to_string(full) + " is beyond the analysis limit");
    const auto p = static_cast<std::uint64_t>(full);
    const Bits c = clocked_sequence(cfg.spec, static_cast<std::size_t>(2 * p));
    const std::uint64_t minimal = minimal_period_dividing(c, p);
    if (!period) period = minimal;
    bits.assign(c.begin(), c.end());
  }

  if (period) {
    if (*period == 0) throw Exit{kConfigError, "period must be positive"};
    if (bits.size() < *period)
      throw Exit{kConfigError, "input holds " + std::to_string(bits.size()) + " bits, fewer than the period " +
                                   std::to_string(*period)};
    for (std::size_t i = *period; i < bits.size(); ++i) {
      if (bits[i] != bits[i % *period])
        throw Exit{kConfigError, "input is not periodic with period " + std::to_string(*period) + " (bit " +
                                     std::to_string(i + 1) + ")"};
    }
    bits.resize(*period);
  } else if (a.method != "bm") {
    throw Exit{kConfigError, "--method " + a.method + " needs a declared period"};
  } else {
    err << "warning: no declared period; reporting the linear complexity of the prefix only\n";
  }

  ojson j;
  std::optional<LinearComplexityResult> bm;
  std::optional<int> rk;
  if (a.method == "bm" || a.method == "both") bm = period ? periodic_linear_complexity(bits) : berlekamp_massey(bits);
  if (a.method == "rank" || a.method == "both") rk = bits.empty() ? 0 : lc_via_circulant(bits);
  j["lc"] = bm ? bm->complexity : *rk;
  j["min_poly"] = bm ? bm->min_poly.to_string() : periodic_minimal_polynomial(bits).to_string();
  j["period"] = period ? ojson(*period) : ojson(nullptr);
  if (a.method == "both") {
    j["bm"] = bm->complexity;
    j["rank"] = *rk;
    j["agree"] = bm->complexity == *rk;
  }
  emit(out, j);
  if (bm && rk && bm->complexity != *rk) {
    err << "error: Berlekamp-Massey and circulant rank disagree\n";
    return kDisagreement;
  }
  return kOk;
}

struct BoundArgs {
  std::string config;
  bool exact = false, diagnostics = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
  const SpecConfig cfg = load_config(a.config);
  for (const auto& w : warnings(cfg.spec)) err << "warning: " << w << '\n';
  BoundOptions opts;
  opts.exact = a.exact;
  opts.all_factors = a.diagnostics;
  opts.limits = cfg.limits;
  const BoundReport r = compute_bound(cfg.spec, opts);
  ojson j = to_json(r);
  int code = kOk;
  if (a.diagnostics) {
    const DecompositionReport d = exact_decomposition_check(cfg.spec, cfg.limits);
    j["decomposition"] = to_json(d);
    if (!d.all_hold()) {
      err << "error: per-factor rank differs from h_t * deg p_t\n";
      code = kDisagreement;
    }
    if (r.exact_lc && d.intermediate_bound > *r.exact_lc) {
      err << "error: intermediate bound " << d.intermediate_bound << " exceeds L(C) = " << *r.exact_lc << '\n';
      code = kSoundnessViolation;
    }
  }
  emit(out, j);
  if (r.exact_lc && r.bound > *r.exact_lc) {
    err << "error: bound " << r.bound << " exceeds L(C) = " << *r.exact_lc << '\n';
    code = kSoundnessViolation;
  }
  return code;
}

struct SweepArgs {
  SweepFamily family;
  std::uint64_t trials = 100, seed = 1;
  std::string out;
};

unsigned thread_cap() {
  const char* env = std::getenv("SEQLC_THREADS");
  if (!env || !*env) return 0;
  try {
    const unsigned long v = std::stoul(env);
    return static_cast<unsigned>(std::max(1ul, v));
  } catch (const std::exception&) {
    throw Exit{kConfigError, "SEQLC_THREADS must be a positive integer"};
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const auto rows = tightness_sweep(a.family, a.trials, a.seed, thread_cap());
  emit_to(a.out, out, sweep_csv(rows));
  const auto bad = std::count_if(rows.begin(), rows.end(),
                                 [](const SweepRow& r) { return r.bound > r.exact_lc || r.exact_lc > r.upper_bound; });
  if (bad > 0) {
    err << "error: " << bad << " rows violate bound <= L(C) <= m L(B)\n";
    return kSoundnessViolation;
  }
  return kOk;
}

struct ValidateArgs {
  int degree = 3;
  std::string q, step_map = "one_bit", feedback;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  u128 q = 0;
  try {
    q = parse_u128(a.q);
  } catch (const std::exception& e) {
    throw Exit{kConfigError, std::string("--q: ") + e.what()};
  }
  std::optional<BinaryPolynomial> feedback;
  if (!a.feedback.empty()) {
    try {
      feedback = BinaryPolynomial::parse(a.feedback);
    } catch (const std::exception& e) {
      throw Exit{kConfigError, std::string("--feedback: ") + e.what()};
    }
  }
  const StepVariant variant = a.step_map == "two_bit" ? StepVariant::TwoBit : StepVariant::OneBit;
  const ValidationReport rep = validate_lifi_params(a.degree, q, variant, feedback);
  emit(out, to_json(rep));
  return rep.all_passed() ? kOk : kValidationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clock-controlled keystream generators: exact linear complexity and lower bounds", "seqlc"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write keystream bits to a sequence file");
  g->add_option("config", gen.config, "Generator config (JSON)")->required();
  g->add_option("--count,-n", gen.count, "Number of bits")->required();
  g->add_option("--out,-o", gen.out, "Output path (default stdout)");

  LcArgs lc;
  auto* l = app.add_subcommand("lc", "Linear complexity of a sequence file or a config's keystream");
  l->add_option("--in", lc.in, "Sequence file");
  l->add_option("--config", lc.config, "Generator config (JSON)");
  l->add_option("--period", lc.period, "Declared period");
  l->add_option("--method", lc.method, "bm, rank or both")->check(CLI::IsMember({"bm", "rank", "both"}));

  BoundArgs bd;
  auto* b = app.add_subcommand("bound", "Lower bound on the keystream's linear complexity");
  b->add_option("config", bd.config, "Generator config (JSON)")->required();
  b->add_flag("--exact", bd.exact, "Also compute L(C) by Berlekamp-Massey");
  b->add_flag("--diagnostics", bd.diagnostics, "Compute g_t for every factor and the per-factor rank check");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Bound versus exact LC over random instances (CSV)");
  s->add_option("--m-min", sw.family.m_min);
  s->add_option("--m-max", sw.family.m_max);
  s->add_option("--n-min", sw.family.n_min);
  s->add_option("--n-max", sw.family.n_max);
  s->add_option("--max-step", sw.family.max_step);
  s->add_flag("--constant-step", sw.family.constant_step, "Every step is 1");
  s->add_option("--trials", sw.trials);
  s->add_option("--seed", sw.seed);
  s->add_option("--out,-o", sw.out, "Output path (default stdout)");

  ValidateArgs va;
  auto* v = app.add_subcommand("validate", "Check generator parameters (safe prime q, primitivity, coprimality)");
  v->add_option("--degree,-L", va.degree, "Control register length");
  v->add_option("--q", va.q, "FCSR connection integer")->required();
  v->add_option("--step-map", va.step_map)->check(CLI::IsMember({"one_bit", "two_bit"}));
  v->add_option("--feedback", va.feedback, "Control feedback polynomial (default: smallest primitive)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*l) return cmd_lc(lc, out, err);
    if (*b) return cmd_bound(bd, out, err);
    if (*s) return cmd_sweep(sw, out, err);
    return cmd_validate(va, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const InfeasibleError& e) {
    err << "error: infeasible: " << e.what() << '\n';
    return kConfigError;
  } catch (const PreconditionError& e) {
    err << "error: precondition failed: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace seqlc::cli
