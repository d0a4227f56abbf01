#pragma once

#include <stdexcept>
#include <string>

namespace bridgepants {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A slope p/q with q even describes a two-component 2-bridge link.
class NotAKnotError : public DomainError {
 public:
  NotAKnotError() : DomainError("two-bridge link, not a knot") {}
};

// Volume bounds were requested for a knot that is not hyperbolic.
class NotHyperbolicError : public DomainError {
 public:
  NotHyperbolicError() : DomainError("not hyperbolic, bounds inapplicable") {}
};

// An internal consistency check failed (e.g. a bounded search was not stable).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bridgepants
