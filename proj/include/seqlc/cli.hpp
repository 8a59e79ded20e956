#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seqlc::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kConfigError = 2,
  kIoError = 3,
  kDisagreement = 4,
  kSoundnessViolation = 5,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqlc::cli
