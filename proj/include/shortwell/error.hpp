#pragma once

#include <stdexcept>
#include <string>

namespace shortwell {

/// Raised when an algorithm cannot deliver a result for valid input
/// (divergence, singular systems, exhausted precision).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when inputs violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shortwell
