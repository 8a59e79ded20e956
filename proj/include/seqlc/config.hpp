#pragma once

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "seqlc/bound.hpp"
#include "seqlc/generators.hpp"

namespace seqlc {

/// Malformed configuration; the message carries a byte offset (syntax) or a
/// JSON pointer to the offending field (schema).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SpecConfig {
  ClockedSpec spec;
  AnalysisLimits limits;
};

/// {"control": {"lfsr": {...}, "step_map": {"taps": [...], "table": [...]}}
///           | {"steps": [...]}        (optional, default steps [1]),
///  "controlled": {"lfsr": {"feedback": "...", "state": "..."}}
///              | {"fcsr": {"q": ..., "a": ...}} | {"bits": "..."},
///  "limits": {"max_n", "max_m", "max_exact_terms", "max_decomposition"}}
SpecConfig parse_config(std::string_view text);
/// IoError when unreadable, ConfigError when malformed.
SpecConfig load_config(const std::filesystem::path& path);

}  // namespace seqlc
