#pragma once

#include <stdexcept>
#include <string>

namespace riccati {

/// Base class for every failure this library reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested within the exclusion radius of a pole or zero.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// A trace lacks the derivative data an operation requires.
class MissingDerivative : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (e.g. eta < 0 on the half line).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lower hypergeometric parameter is a nonpositive integer and the series
/// does not terminate first; or a gamma pole was hit.
class PoleParameter : public Error {
 public:
  using Error::Error;
};

/// Series / transformation chain / continuation failed to converge.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Argument lies on the branch cut [1, inf) and no side was selected.
class CutAmbiguity : public Error {
 public:
  using Error::Error;
};

/// A closed-form exponent family degenerates (lower parameter hits a
/// nonpositive integer without termination).
class BranchConflict : public Error {
 public:
  using Error::Error;
};

/// Division by a value too close to zero (e.g. 1/w2 near a zero of w2).
class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// Adaptive integrator driven below the minimum step size.
class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

/// NaN/Inf encountered during evaluation or integration.
class NonFinite : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exceeded its maximum bisection depth.
class MaxDepth : public Error {
 public:
  using Error::Error;
};

/// Wronskian-based check got two (numerically) proportional solutions.
class DegeneratePair : public Error {
 public:
  using Error::Error;
};

}  // namespace riccati
