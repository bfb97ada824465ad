#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

// Raised when caller-supplied data violates an operation's precondition.
// `cause()` is a short machine-readable tag (e.g. "not_coprime").
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string cause, const std::string& what)
      : std::invalid_argument(what), cause_(std::move(cause)) {}

  const std::string& cause() const noexcept { return cause_; }

 private:
  std::string cause_;
};

// A group element with a fixed point on S^3 (eigenvalue turn 0).
class FixedPointError : public ValidationError {
 public:
  explicit FixedPointError(const std::string& what)
      : ValidationError("fixed_point", what) {}
};

}  // namespace instanton
