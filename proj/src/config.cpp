#include "seqlc/config.hpp"

#include <set>

#include "json.hpp"
#include "seqlc/seqio.hpp"

namespace seqlc {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ConfigError(where + ": " + what); }

void only_keys(const json& obj, const std::string& where, std::set<std::string> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [k, _] : obj.items()) {
    if (!allowed.count(k)) fail(where + "/" + k, "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) fail(where, "missing key \"" + key + "\"");
  return obj.at(key);
}

std::uint64_t as_u64(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  fail(where, "expected a non-negative integer");
}

// Integers beyond 64 bits are written as decimal strings.
u128 as_u128(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_u128(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  return as_u64(v, where);
}

BinaryPolynomial as_poly(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a polynomial string");
  try {
    return BinaryPolynomial::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Bits as_bits(const json& v, const std::string& where) {
  Bits out;
  if (v.is_string()) {
    for (char c : v.get<std::string>()) {
      if (c == '0' || c == '1') {
        out.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c != ' ') {
        fail(where, "bit strings may only contain 0 and 1");
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto b = as_u64(v[i], where + "/" + std::to_string(i));
      if (b > 1) fail(where + "/" + std::to_string(i), "expected 0 or 1");
      out.push_back(static_cast<std::uint8_t>(b));
    }
  } else {
    fail(where, "expected a bit string or an array of bits");
  }
  return out;
}

std::vector<std::uint64_t> as_u64_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_u64(v[i], where + "/" + std::to_string(i)));
  return out;
}

LfsrSpec parse_lfsr(const json& v, const std::string& where) {
  only_keys(v, where, {"feedback", "state"});
  LfsrSpec s{as_poly(require(v, where, "feedback"), where + "/feedback"),
             as_bits(require(v, where, "state"), where + "/state")};
  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return s;
}

StepMap parse_step_map(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "one_bit") return lifi_step_map(StepVariant::OneBit);
    if (name == "two_bit") return lifi_step_map(StepVariant::TwoBit);
    fail(where, "unknown step map \"" + name + "\" (one_bit, two_bit, or an object)");
  }
  only_keys(v, where, {"taps", "table"});
  StepMap m;
  for (auto t : as_u64_list(require(v, where, "taps"), where + "/taps")) m.taps.push_back(static_cast<int>(t));
  m.table = as_u64_list(require(v, where, "table"), where + "/table");
  return m;
}

ControlSpec parse_control(const json& v) {
  const std::string where = "/control";
  only_keys(v, where, {"lfsr", "step_map", "steps"});
  if (v.contains("steps")) {
    if (v.contains("lfsr") || v.contains("step_map")) fail(where, "give either \"steps\" or \"lfsr\" with \"step_map\"");
    return ExplicitSteps{as_u64_list(v.at("steps"), where + "/steps")};
  }
  LfsrControl c{parse_lfsr(require(v, where, "lfsr"), where + "/lfsr"), {}};
  c.map = v.contains("step_map") ? parse_step_map(v.at("step_map"), where + "/step_map")
                                 : lifi_step_map(StepVariant::OneBit);
  return c;
}

ControlledSpec parse_controlled(const json& v) {
  const std::string where = "/controlled";
  only_keys(v, where, {"lfsr", "fcsr", "bits"});
  if (v.size() != 1) fail(where, "give exactly one of \"lfsr\", \"fcsr\", \"bits\"");
  if (v.contains("lfsr")) return parse_lfsr(v.at("lfsr"), where + "/lfsr");
  if (v.contains("bits")) return ExplicitBits{as_bits(v.at("bits"), where + "/bits")};
  const json& f = v.at("fcsr");
  only_keys(f, where + "/fcsr", {"q", "a"});
  FcsrSpec s{as_u128(require(f, where + "/fcsr", "q"), where + "/fcsr/q"),
             f.contains("a") ? as_u128(f.at("a"), where + "/fcsr/a") : u128{1}};
  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    fail(where + "/fcsr", e.what());
  }
  return s;
}

AnalysisLimits parse_limits(const json& v) {
  const std::string where = "/limits";
  only_keys(v, where, {"max_n", "max_m", "max_exact_terms", "max_decomposition"});
  AnalysisLimits l;
  if (v.contains("max_n")) l.max_n = as_u64(v.at("max_n"), where + "/max_n");
  if (v.contains("max_m")) l.max_m = as_u64(v.at("max_m"), where + "/max_m");
  if (v.contains("max_exact_terms")) l.max_exact_terms = as_u64(v.at("max_exact_terms"), where + "/max_exact_terms");
  if (v.contains("max_decomposition"))
    l.max_decomposition = as_u64(v.at("max_decomposition"), where + "/max_decomposition");
  return l;
}

}  // namespace

SpecConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  only_keys(doc, "", {"control", "controlled", "limits"});
  SpecConfig cfg{{ExplicitSteps{{1}}, ExplicitBits{}}, {}};
  if (doc.contains("control")) cfg.spec.control = parse_control(doc.at("control"));
  cfg.spec.controlled = parse_controlled(require(doc, "", "controlled"));
  if (doc.contains("limits")) cfg.limits = parse_limits(doc.at("limits"));
  try {
    validate(cfg.spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("/: ") + e.what());
  }
  return cfg;
}

SpecConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

}  // namespace seqlc
