#pragma once

#include <stdexcept>
#include <string>

namespace spencerlab {

/// Malformed or unsupported input (bad syntax, inhomogeneous ideal, index out of range).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the polynomial parser; carries the byte offset of the offending token.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource limit (Groebner pair budget, degree bound) was exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed (d*d != 0, inexact division, non-chain transition).
/// Always a bug in a construction, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spencerlab
