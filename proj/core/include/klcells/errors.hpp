#pragma once

#include <stdexcept>
#include <string>

namespace klcells {

/// A computation needed elements beyond the caller's length or level bound.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

/// Input outside the supported catalog (Cartan types, centralizer types).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly failed; always a bug or a genuine
/// counterexample, never a tolerance issue.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace klcells
