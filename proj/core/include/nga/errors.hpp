#pragma once

#include <stdexcept>
#include <string>

namespace nga {

/// Bad user-facing input: malformed graph6, out-of-range bounds, unknown edge.
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural fact the theory guarantees failed to hold at runtime.
/// Reaching this means either a bug or a counterexample; the CLI maps it
/// to exit code 1 together with the name of the failing check.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nga
