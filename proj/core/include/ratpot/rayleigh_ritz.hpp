#pragma once

#include <vector>

#include "ratpot/extended.hpp"
#include "ratpot/model.hpp"

namespace ratpot {

inline constexpr int kDefaultBasisSize = 22;

/// phi_j(x) = x^{2j+s} (1 + g x^2) e^{-x^2/2}, j = 0 .. size-1.
struct RRBasisSpec {
  int size = kDefaultBasisSize;
  Parity s = Parity::even;
  double g = 1.0;
};

/// Integral of x^{2k} e^{-x^2} over the real line, sqrt(pi) (2k-1)!! / 2^k.
/// Throws InvalidParameter for k < 0 and RangeError when the value
/// overflows a double.
double gaussian_moment(int k);

/// Same moment carried in Extended precision.
Extended gaussian_moment_extended(int k);

/// Hamiltonian and overlap matrices in the basis, assembled exactly from
/// Gaussian moments.
struct RRMatrices {
  RRBasisSpec spec;
  double lambda = 0.0;
  ExtendedMatrix hamiltonian;
  ExtendedMatrix overlap;
  /// <phi_a| x^2/(1+gx^2) |phi_b>, the lambda-derivative of the Hamiltonian.
  ExtendedMatrix rational;
  /// <phi_a| x^4/(1+gx^2)^2 |phi_b>.
  ExtendedMatrix rational_squared;

  double h(int a, int b) const { return static_cast<double>(hamiltonian(a, b)); }
  double s(int a, int b) const { return static_cast<double>(overlap(a, b)); }
};

RRMatrices assemble_matrices(const RRBasisSpec& spec, double lambda);

struct RRSolution {
  std::vector<double> eigenvalues;           // ascending
  std::vector<ExtendedVector> eigenvectors;  // S-orthonormal basis coefficients
  RRMatrices matrices;
  /// Eigenvalues with index < converged_count are trusted (size/2, rounded up).
  int converged_count = 0;
  /// max_k ||H v_k - E_k S v_k|| / ||H||.
  double max_relative_residual = 0.0;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

/// Solves H v = E S v: scale the basis to unit S-diagonal, factor S = L L^T,
/// diagonalize L^{-1} H L^{-T} and back-transform. Throws ConditioningError
/// if S is not numerically positive definite.
RRSolution solve_generalized(const RRMatrices& m);

/// Lowest `count` eigenvalues of the parity-s sector.
std::vector<double> rr_spectrum(double lambda, double g, Parity s, int basis_size, int count);

/// |E_k(N) - E_k(N-2)| for the lowest `count` eigenvalues.
std::vector<double> rr_convergence_shift(double lambda, double g, Parity s, int basis_size, int count);

struct Expectations {
  double x2_over_denominator = 0.0;           // <x^2/(1+gx^2)>
  double x4_over_denominator_squared = 0.0;   // <x^4/(1+gx^2)^2>
};

/// Expectation values in the state with index `k` of the sector (k = 0 is the
/// lowest eigenvalue, so nu = 2k + s).
Expectations expectation_values(const RRSolution& sol, int k);

struct HftCheck {
  double fd_slope = 0.0;
  double hft_value = 0.0;
  double abs_diff = 0.0;
};

/// Central difference of the RR eigenvalue with node count nu against
/// <x^2/(1+gx^2)>. nu must have parity s.
HftCheck hft_lambda_check(double lambda, double g, Parity s, int nu, double h,
                          int basis_size = kDefaultBasisSize);

struct GridSpec;

/// Central difference in g of the finite-difference eigenvalue with node
/// count nu against -lambda <x^4/(1+gx^2)^2> from the RR state at (lambda, g).
/// The RR basis depends on g, so its eigenvalues are not differentiated.
HftCheck hft_g_check(double lambda, double g, Parity s, int nu, double h,
                     int basis_size = kDefaultBasisSize);
HftCheck hft_g_check(double lambda, double g, Parity s, int nu, double h, int basis_size,
                     const GridSpec& grid);

}  // namespace ratpot
