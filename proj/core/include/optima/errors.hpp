#pragma once

#include <stdexcept>
#include <string>

namespace optima {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (spec strings, points files, lattice files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two inner-product clusters closer than the resolvable separation.
class ClusterAmbiguityError : public Error {
 public:
  using Error::Error;
};

/// A work budget (vector count, insertion attempts, iterations) ran out.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A certificate or auxiliary function failed verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A truncated lattice sum cannot reach its tolerance at the given radius.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double required_r2)
      : Error(what), required_r2_(required_r2) {}
  double required_r2() const noexcept { return required_r2_; }

 private:
  double required_r2_;
};

}  // namespace optima
