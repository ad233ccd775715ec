#pragma once

#include <stdexcept>
#include <string>

namespace ratpot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The quantization condition produced a root set that is not real,
/// non-positive and distinct.
class QuantizationFailure : public Error {
 public:
  using Error::Error;
};

/// A polynomial factor has a root at (or numerically at) x = 0, or a
/// repeated positive root, so its nodes cannot be counted as simple zeros.
class DegenerateNode : public Error {
 public:
  using Error::Error;
};

/// A computed object violates an invariant that must hold for every exact
/// state (node law, series termination).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The overlap matrix is not numerically positive definite. `pivot` is the
/// zero-based column where the Cholesky factorization broke down, which is
/// also the largest basis size that factors successfully.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, int pivot)
      : Error(what), pivot_(pivot) {}

  int pivot() const noexcept { return pivot_; }
  int largest_usable_size() const noexcept { return pivot_; }

 private:
  int pivot_;
};

/// A value is not representable in the working floating-point type.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An iterative eigensolver did not produce a consistent result.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ratpot
