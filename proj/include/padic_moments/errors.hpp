#pragma once

#include <stdexcept>
#include <string>

namespace padic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator divisible by p reached a place that needs a p-adic integer.
class NonIntegralError : public Error {
 public:
  using Error::Error;
};

// Bad parameters: non-prime p, empty windows, c not a usable unit, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operands built over different precision profiles.
class ProfileMismatchError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical input failed (no inverse, no
// termination, window too narrow for a pole, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree exactly did not.
class RouteMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace padic
