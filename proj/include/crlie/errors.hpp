#pragma once

#include <stdexcept>

namespace crlie {

/// Operands of incompatible shapes or ambients.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object failed its structural self-check. Either the input
/// violates a precondition that cannot be tested directly, or there is a bug.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crlie
