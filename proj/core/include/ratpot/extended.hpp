#pragma once

#include <boost/multiprecision/float128.hpp>
#include <cstddef>
#include <vector>

namespace ratpot {

/// IEEE binary128. The variational overlap matrices reach condition numbers
/// near 1e20 at the default basis size, past what binary64 can factor.
using Extended = boost::multiprecision::float128;

/// Row-major dense square matrix over Extended.
class ExtendedMatrix {
 public:
  ExtendedMatrix() = default;
  explicit ExtendedMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, Extended(0)) {}

  int size() const noexcept { return n_; }
  Extended& operator()(int r, int c) noexcept { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  const Extended& operator()(int r, int c) const noexcept {
    return data_[static_cast<std::size_t>(r) * n_ + c];
  }

  static ExtendedMatrix identity(int n);

  /// Largest absolute row sum.
  Extended norm_inf() const;

 private:
  int n_ = 0;
  std::vector<Extended> data_;
};

using ExtendedVector = std::vector<Extended>;

ExtendedVector multiply(const ExtendedMatrix& m, const ExtendedVector& v);
Extended dot(const ExtendedVector& a, const ExtendedVector& b);

/// Lower-triangular L with L L^T = a. Returns the zero-based column at which
/// a non-positive pivot appeared, or -1 on success.
int cholesky(const ExtendedMatrix& a, ExtendedMatrix& lower);

struct SymmetricEigen {
  ExtendedVector values;              // ascending
  std::vector<ExtendedVector> vectors;  // orthonormal, matching values
};

/// Cyclic Jacobi rotations on a symmetric matrix. Throws SolverFailure if
/// the off-diagonal mass does not fall below round-off within the sweep
/// limit.
SymmetricEigen symmetric_eigen(ExtendedMatrix a);

}  // namespace ratpot
