#pragma once

#include <stdexcept>
#include <string>

namespace seqlc {

/// An operation was called on inputs outside its documented domain
/// (e.g. gcd(s_m, n) != 1 for the bound pipeline).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but beyond the configured analysis limits.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InsufficientTermsError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace seqlc
