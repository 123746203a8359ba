#pragma once

#include <stdexcept>
#include <string>

namespace tobit {

// Invalid arguments or inputs that violate a documented precondition.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures (factorization breakdown, overflow) discovered at runtime.
// `failed_index` identifies the offending pivot/column when known, else -1.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what, long failed_index = -1)
      : std::runtime_error(what), failed_index(failed_index) {}
  long failed_index;
};

// Malformed configuration files, unknown keys, or file-schema violations.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tobit
