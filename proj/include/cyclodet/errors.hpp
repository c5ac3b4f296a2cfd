#pragma once

#include <stdexcept>
#include <string>

namespace cyclodet {

// Bad user-supplied parameters (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A mathematical contract that the theory guarantees was violated at runtime;
// always indicates a logic bug upstream (CLI exit code 3).
class IntegrityError : public std::logic_error {
 public:
  explicit IntegrityError(const std::string& msg) : std::logic_error(msg) {}
};

// Working precision cannot certify the requested rounding; rerun with a
// higher --precision.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cyclodet
