#pragma once

#include <stdexcept>
#include <string>

namespace hwm {

// Violated precondition on shapes or call order.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid or missing configuration, including unknown keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file: bad magic, truncated blob, wrong version.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A NaN or Inf showed up where it must not.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hwm
