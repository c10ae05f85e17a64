#pragma once

#include <stdexcept>

namespace evenrhythm {

// Arguments that break an operation's contract: bad notation, modulus
// mismatch, out-of-range residue, empty vector.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input below the supported size (e.g. a cycle with one entry).
class UnsupportedSize : public UsageError {
 public:
  using UsageError::UsageError;
};

// A structural invariant does not hold: an entry list without property (A),
// or an internal cross-check between two computation paths disagreed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The orbit did not reach width <= 1 within the iteration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would produce more elements than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evenrhythm
