#pragma once

#include <stdexcept>
#include <string>

namespace opdam {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies on (or numerically too close to) a Weyl chamber wall.
class WallError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of the routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter violates a structural precondition (order, exponent, n, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A series or quadrature did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// tau(lambda) = k^2: the operator identity for G cannot be divided through.
class SingularSpectralParam : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact eigenvalue collision in the oracle (resonant multiplicity).
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// A denominator of the projection operator vanishes.
class ResonantParam : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace opdam
