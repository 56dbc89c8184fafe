#pragma once

#include <stdexcept>
#include <string>

namespace smse {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Level-set queries failed: projection did not converge, gradient vanished.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Invalid physics or tolerance parameters (e.g. alpha >= 0 without override).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Grid too coarse for the domain (no interior nodes, h too large).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// ODE integration failed (step underflow, arclength budget exceeded).
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing failed in the radial Dirichlet fit.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A field value violated the positivity requirement of the operator.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sparse linear solve broke down.
class LinearSolveError : public Error {
 public:
  using Error::Error;
};

/// Nonlinear solve failed beyond recovery (continuation step underflow etc).
class SolverError : public Error {
 public:
  using Error::Error;
};

/// File or format problems in readers/writers.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace smse
