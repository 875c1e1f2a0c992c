#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace golodkit {

// Base of every error the library raises. The CLI maps the subclasses to
// process exit codes (validation 1, budget 2, invariant 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed expressions, non-homogeneous or non-Artinian
// presentations, mismatched contexts, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : ValidationError(msg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A linear-algebra problem grew past the configured matrix-size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace golodkit
