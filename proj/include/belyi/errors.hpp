#pragma once

#include <stdexcept>
#include <string>

namespace belyi {

// Base of every error the library raises on purpose. The CLI maps each
// subclass to a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// No closed-form construction is available for the requested type.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

// A theorem's hypothesis does not hold, so its conclusion cannot be used.
class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

// Integer factorization needed for divisor enumeration could not be
// completed within the configured limits.
class IncompleteFactorization : public Error {
 public:
  using Error::Error;
};

// A map is not of the normalized three-point shape an operation needs.
class NotBelyiNormalized : public Error {
 public:
  using Error::Error;
};

// A proven structural property failed; signals a bug, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace belyi
