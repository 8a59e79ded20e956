#include "seqlc/bound.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <random>
#include <thread>
#include <unordered_map>

#include "seqlc/analysis.hpp"
#include "seqlc/extfield.hpp"
#include "seqlc/gf2linalg.hpp"

namespace seqlc {

namespace {

std::uint64_t narrow(u128 v, const char* what) {
  if (v >> 64) throw InfeasibleError(std::string(what) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

struct Instance {
  std::uint64_t m, n, s_m, v;
  std::vector<std::uint64_t> steps;
  Bits b;
};

Instance load_instance(const ClockedSpec& spec, const AnalysisLimits& limits) {
  validate(spec);
  const u128 n = controlled_period(spec);
  if (n > limits.max_n)
    throw InfeasibleError("controlled period n = " + to_string(n) + " exceeds the analysis limit " +
                          std::to_string(limits.max_n) + "; only keystream generation is supported at this size");
  const u128 m = control_period(spec);
  if (m > limits.max_m)
    throw InfeasibleError("control period m = " + to_string(m) + " exceeds the analysis limit " +
                          std::to_string(limits.max_m) + "; only keystream generation is supported at this size");
  const u128 s = step_sum(spec);
  if (gcd_u128(s, n) != 1)
    throw PreconditionError("gcd(s_m, n) = gcd(" + to_string(s) + ", " + to_string(n) + ") = " +
                            to_string(gcd_u128(s, n)) + ", the bound needs 1");
  Instance in;
  in.m = static_cast<std::uint64_t>(m);
  in.n = static_cast<std::uint64_t>(n);
  in.s_m = narrow(s, "s_m");
  in.v = in.n == 1 ? 0 : static_cast<std::uint64_t>(invmod(s % n, n));
  in.steps = control_steps_period(spec, in.m);
  in.b = controlled_period_bits(spec, in.n);
  return in;
}

// C^1_i = c_{1+mi} = b_{s_1 + s_m i}, one period.
Bits first_subsequence(const Instance& in) {
  const std::uint64_t n = in.n;
  Bits c1(n);
  std::uint64_t idx = (in.steps[0] % n + n - 1) % n;
  const std::uint64_t stride = in.s_m % n;
  for (auto& c : c1) {
    c = in.b[idx];
    idx = (idx + stride) % n;
  }
  return c1;
}

// deg gcd(E, y^m + alpha^-1) over F2[x]/(p), E = sum beta^{s_{i+1}} y^i.
std::uint64_t compute_g(const Instance& in, const BinaryPolynomial& p, std::uint64_t n_odd) {
  const FieldPtr field = ExtensionField::create(p);
  const ExtensionElement alpha = ExtensionElement::generator(field);
  std::unordered_map<std::uint64_t, ExtensionElement> powers;
  const auto v = static_cast<u128>(in.v % n_odd);
  std::vector<ExtensionElement> e;
  e.reserve(in.steps.size());
  std::uint64_t s = 0;  // s_{i+1} mod n'
  for (auto step : in.steps) {
    s = (s + step % n_odd) % n_odd;
    const auto k = static_cast<std::uint64_t>(v * s % n_odd);
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, ext_pow(alpha, static_cast<std::int64_t>(k))).first;
    e.push_back(it->second);
  }
  const ExtensionPolynomial E(field, std::move(e));
  const int m = static_cast<int>(in.m);
  if (E.is_zero()) return in.m;  // cannot happen: every coefficient is a unit
  return in.m - static_cast<std::uint64_t>(r_circulant_rank_ext(E, m, ext_inv(alpha)));
}

}  // namespace

std::optional<double> BoundReport::tightness() const {
  if (!exact_lc) return std::nullopt;
  if (*exact_lc == 0) return 1.0;
  return static_cast<double>(bound) / static_cast<double>(*exact_lc);
}

BoundReport compute_bound(const ClockedSpec& spec, const BoundOptions& options) {
  const Instance in = load_instance(spec, options.limits);
  BoundReport r;
  r.n = in.n;
  r.m = in.m;
  r.s_m = in.s_m;
  r.v = in.v;

  const FactorList fl = factor_xn_plus_1(static_cast<int>(in.n));
  r.sigma = fl.sigma;
  const std::uint64_t n_odd = in.n >> fl.sigma;

  const Bits c1 = first_subsequence(in);
  r.h_poly = periodic_linear_complexity(c1).min_poly;
  if (!poly_mod(BinaryPolynomial::x_pow_plus_one(static_cast<int>(in.n)), r.h_poly).is_zero())
    throw std::logic_error("minimal polynomial of C^1 does not divide x^n + 1");

  for (const auto& f : fl.factors) {
    if (!f.poly.coeff(0)) throw std::logic_error("factor of x^n + 1 with zero constant term");
    FactorRecord rec;
    rec.p = f.poly;
    rec.degree = f.poly.degree();
    rec.h = multiplicity(r.h_poly, f.poly);
    if (rec.h > 0 || options.all_factors) {
      rec.g = compute_g(in, f.poly, n_odd);
      rec.g_computed = true;
    }
    rec.contribution = rec.h > 0 ? static_cast<std::uint64_t>(rec.h) * rec.degree * (in.m - rec.g) : 0;
    r.bound += rec.contribution;
    r.factors.push_back(std::move(rec));
  }

  const Bits b(in.b);
  r.upper_bound = in.m * static_cast<std::uint64_t>(periodic_linear_complexity(b).complexity);

  if (options.exact) {
    const u128 terms = u128{2} * in.m * in.n;
    if (terms > options.limits.max_exact_terms)
      throw InfeasibleError("exact linear complexity needs 2mn = " + to_string(terms) +
                            " keystream bits, above the limit " + std::to_string(options.limits.max_exact_terms));
    const Bits c = clocked_sequence(spec, static_cast<std::size_t>(terms));
    r.exact_lc = static_cast<std::uint64_t>(berlekamp_massey(c).complexity);
    r.period = minimal_period_dividing(c, in.m * in.n);
  }
  check_report_invariants(r);
  return r;
}

void check_report_invariants(const BoundReport& r) {
  std::uint64_t total = 0, degree_sum = 0;
  for (const auto& f : r.factors) {
    if (f.g > r.m) throw std::logic_error("g_t exceeds m");
    if (f.h < 0 || f.h > (1 << r.sigma)) throw std::logic_error("h_t outside 0..2^sigma");
    if (f.contribution != static_cast<std::uint64_t>(f.h) * f.degree * (r.m - f.g) && f.h > 0)
      throw std::logic_error("contribution mismatch");
    total += f.contribution;
    degree_sum += static_cast<std::uint64_t>(f.h) * f.degree;
  }
  if (total != r.bound) throw std::logic_error("bound is not the sum of contributions");
  if (degree_sum != static_cast<std::uint64_t>(r.h_poly.degree()))
    throw std::logic_error("sum of h_t deg p_t differs from deg H");
  if (r.n > 1 && static_cast<u128>(r.v) * r.s_m % r.n != 1) throw std::logic_error("v is not s_m^-1 mod n");
}

bool DecompositionReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.holds(); });
}

DecompositionReport exact_decomposition_check(const ClockedSpec& spec, const AnalysisLimits& limits) {
  BoundOptions opts;
  opts.all_factors = true;
  opts.limits = limits;
  const BoundReport report = compute_bound(spec, opts);
  if (static_cast<u128>(report.n) * report.m > limits.max_decomposition)
    throw InfeasibleError("decomposition check needs n * m <= " + std::to_string(limits.max_decomposition) +
                          ", got " + std::to_string(report.n) + " * " + std::to_string(report.m));
  const Instance in = load_instance(spec, limits);
  const std::uint64_t n = in.n;
  // F^1(x) x^(-s_1 v) with x replaced by x^-1 (mod x^n + 1): the circulant of
  // C^1 acts through the inverse shift, so this orientation pairs p_t with h_t.
  const std::uint64_t shift = static_cast<std::uint64_t>(static_cast<u128>(in.steps[0] % n) * in.v % n);
  const Bits c1 = first_subsequence(in);
  BinaryPolynomial f;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (c1[i]) f.flip_coeff(static_cast<int>((n - i + shift) % n));
  }

  DecompositionReport out;
  for (std::size_t t = 0; t < report.factors.size(); ++t) {
    const auto& rec = report.factors[t];
    BinaryPolynomial q = BinaryPolynomial::one();
    for (int i = 0; i < (1 << report.sigma); ++i) q = q * rec.p;
    DecompositionEntry e;
    e.t = static_cast<int>(t) + 1;
    e.p = rec.p;
    e.rank_hat = rank_of_poly_at_companion(f, q);
    e.expected = rec.h * rec.degree;
    e.g = rec.g;
    if (rec.h == 0 && e.rank_hat == 0) continue;
    e.rank_matrix = static_cast<int>(rank(poly_at_matrix(poly_mod(f, q), companion(q))));
    out.intermediate_bound += static_cast<std::uint64_t>(e.rank_hat) * (report.m - rec.g);
    out.entries.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ClockedSpec> sweep_instances(const SweepFamily& fam, std::uint64_t trials, std::uint64_t seed) {
  if (fam.n_min < 1 || fam.n_min > fam.n_max) throw PreconditionError("empty range for n");
  if (!fam.constant_step) {
    if (fam.m_min < 1 || fam.m_min > fam.m_max) throw PreconditionError("empty range for m");
    if (fam.max_step < 1) throw PreconditionError("empty range for step sizes");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  constexpr int kMaxAttempts = 100000;

  std::vector<ClockedSpec> out;
  out.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
      const std::uint64_t n = uniform(fam.n_min, fam.n_max);
      std::vector<std::uint64_t> steps;
      if (fam.constant_step) {
        steps = {1};
      } else {
        const std::uint64_t m = uniform(fam.m_min, fam.m_max);
        steps.resize(m);
        for (auto& s : steps) s = uniform(1, fam.max_step);
      }
      Bits bits(n);
      for (auto& b : bits) b = static_cast<std::uint8_t>(uniform(0, 1));
      ClockedSpec spec{ExplicitSteps{steps}, ExplicitBits{bits}};
      if (control_period(spec) != steps.size() || controlled_period(spec) != n) continue;
      if (gcd_u128(step_sum(spec), n) != 1) continue;
      out.push_back(std::move(spec));
      found = true;
    }
    if (!found) throw PreconditionError("no instance with gcd(s_m, n) = 1 and full periods in the given ranges");
  }
  return out;
}

std::vector<SweepRow> tightness_sweep(const SweepFamily& family, std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads) {
  const std::vector<ClockedSpec> specs = sweep_instances(family, trials, seed);
  std::vector<SweepRow> rows(specs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      BoundOptions opts;
      opts.exact = true;
      for (std::size_t i = next++; i < specs.size(); i = next++) {
        const BoundReport r = compute_bound(specs[i], opts);
        rows[i] = {r.m, r.n, r.s_m, r.bound, *r.exact_lc, *r.upper_bound, *r.tightness()};
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "m,n,s_m,bound,exact_lc,upper_bound,tightness\n";
  char buf[64];
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.s_m) + ',' +
           std::to_string(r.bound) + ',' + std::to_string(r.exact_lc) + ',' + std::to_string(r.upper_bound) + ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.tightness);
    out += buf;
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

BinaryPolynomial smallest_primitive(int degree) {
  if (degree < 1 || degree > kMaxRegisterLength) throw std::invalid_argument("degree must be in 1..64");
  for (std::uint64_t mid = 0;; ++mid) {
    BinaryPolynomial f = BinaryPolynomial::from_word(1 | (mid << 1));
    f.set_coeff(degree, true);
    if (is_primitive(f)) return f;
  }
}

StepMap lifi_step_map(StepVariant variant) {
  return variant == StepVariant::OneBit ? StepMap::one_plus_symbol({0}) : StepMap::one_plus_symbol({0, 1});
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate_lifi_params(int degree, u128 q, StepVariant variant,
                                      const std::optional<BinaryPolynomial>& feedback) {
  ValidationReport rep;
  rep.degree = degree;
  rep.q = q;
  auto add = [&rep](std::string name, bool ok, std::string witness) {
    rep.checks.push_back({std::move(name), ok, std::move(witness)});
  };
  const std::string qs = to_string(q);

  const bool q_prime = q >= 3 && is_probable_prime(q);
  add("q_prime", q_prime, "q = " + qs + (q_prime ? " is prime" : " is not prime"));

  const bool q_odd = q >= 3 && (q & 1);
  const u128 p = q_odd ? (q - 1) / 2 : 0;
  const std::string ps = to_string(p);
  const bool p_prime = q_odd && is_probable_prime(p);
  if (!q_odd) {
    add("p_prime", false, "q = " + qs + " is not of the form 2p + 1");
  } else {
    add("p_prime", p_prime, "p = (q-1)/2 = " + ps + (p_prime ? " is prime" : ", (q-1)/2 not prime"));
  }

  if (q_prime) {
    const u128 ord = multiplicative_order(2, q);
    add("two_primitive_mod_q", ord == q - 1, "ord_q(2) = " + to_string(ord) + ", q - 1 = " + to_string(q - 1));
  } else {
    add("two_primitive_mod_q", false, "q is not prime");
  }

  if (p_prime && p > 2) {
    const u128 ord = multiplicative_order(2, p);
    add("two_primitive_mod_p", ord == p - 1, "ord_p(2) = " + to_string(ord) + ", p - 1 = " + to_string(p - 1));
  } else {
    add("two_primitive_mod_p", false, p == 2 ? "p = 2 has no unit 2" : "p is not prime");
  }

  const int taps = variant == StepVariant::OneBit ? 1 : 2;
  const bool degree_ok = degree >= taps && degree <= kMaxRegisterLength;
  if (degree_ok && q_odd) {
    // Primitive control: the window meets every nonzero pattern once per period.
    const StepMap map = lifi_step_map(variant);
    u128 table_sum = 0;
    for (auto s : map.table) table_sum += s;
    const u128 s_m = (table_sum << (degree - taps)) - map.table[0];
    const u128 g = gcd_u128(s_m, 2 * p);
    add("gcd_sm_2p", g == 1, "s_m = " + to_string(s_m) + ", 2p = " + to_string(2 * p) + ", gcd = " + to_string(g));
  } else {
    add("gcd_sm_2p", false, degree_ok ? "q is not of the form 2p + 1" : "degree outside the supported range");
  }

  if (degree >= 1 && p >= 1) {
    const u128 g = gcd_u128(p - 1, static_cast<u128>(degree));
    add("gcd_p_minus_1_L", g == 1, "gcd(" + to_string(p - 1) + ", " + std::to_string(degree) + ") = " + to_string(g));
  } else {
    add("gcd_p_minus_1_L", false, degree < 1 ? "degree must be positive" : "q is not of the form 2p + 1");
  }

  if (!degree_ok) {
    add("control_primitive", false, "degree " + std::to_string(degree) + " outside 1..64 (or below the tap count)");
  } else if (feedback) {
    const bool ok = feedback->degree() == degree && is_primitive(*feedback);
    add("control_primitive", ok, "feedback " + feedback->to_string() + (ok ? " is primitive" : " is not a primitive polynomial of degree " + std::to_string(degree)));
  } else {
    add("control_primitive", true, "feedback " + smallest_primitive(degree).to_string() + " is primitive");
  }
  return rep;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["s_m"] = r.s_m;
  j["v"] = r.v;
  j["sigma"] = r.sigma;
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : r.factors) {
    j["factors"].push_back(
        {{"p", f.p.to_string()}, {"deg", f.degree}, {"h", f.h}, {"g", f.g}, {"contribution", f.contribution}});
  }
  j["bound"] = r.bound;
  j["exact_lc"] = r.exact_lc ? nlohmann::ordered_json(*r.exact_lc) : nlohmann::ordered_json(nullptr);
  j["upper_bound"] = r.upper_bound ? nlohmann::ordered_json(*r.upper_bound) : nlohmann::ordered_json(nullptr);
  if (const auto t = r.tightness()) j["tightness"] = *t;
  if (r.period) j["period"] = *r.period;
  return j;
}

nlohmann::ordered_json to_json(const DecompositionReport& d) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : d.entries) {
    j["entries"].push_back({{"t", e.t},
                            {"p", e.p.to_string()},
                            {"rank_hat", e.rank_hat},
                            {"rank_matrix", e.rank_matrix},
                            {"expected", e.expected},
                            {"holds", e.holds()}});
  }
  j["intermediate_bound"] = d.intermediate_bound;
  j["all_hold"] = d.all_hold();
  return j;
}

nlohmann::ordered_json to_json(const ValidationReport& v) {
  nlohmann::ordered_json j;
  j["degree"] = v.degree;
  j["q"] = to_string(v.q);
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : v.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  j["all_passed"] = v.all_passed();
  return j;
}

}  // namespace seqlc
