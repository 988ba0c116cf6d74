#pragma once

#include <stdexcept>
#include <string>

namespace subsum {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group string such as "Z2xZ4".
class SpecError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An element or subset belongs to a different group than the one supplied.
class ForeignElementError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exhaustive work requested beyond the configured order budget or oracle cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A constructor's claimed property failed on the generated instance.
class ClaimViolation : public Error {
 public:
  using Error::Error;
};

// No size s <= |G|-1 forces every s-subset of G\{0} to have full subset sums.
class NoCriticalNumber : public Error {
 public:
  using Error::Error;
};

}  // namespace subsum
