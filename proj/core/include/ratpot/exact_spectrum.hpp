#pragma once

#include <vector>

#include "ratpot/model.hpp"
#include "ratpot/polynomial.hpp"

namespace ratpot {

/// p(x) = sum_j c_j x^{2j}; the spatial factor of the state is x^s p(x).
struct EvenPolynomial {
  Polynomial in_x2;  // q(t) = sum_j c_j t^j, t = x^2
  Parity s = Parity::even;

  double operator()(double x) const noexcept { return in_x2(x * x); }
  double spatial_factor(double x) const noexcept;
  /// Coefficients of x^s p(x) in powers of x.
  Polynomial expanded() const;
};

/// One closed-form solution at a quantization root lambda^(n,i).
struct ExactState {
  int n = 0;
  int i = 1;
  Parity s = Parity::even;
  double g = 1.0;
  double lambda = 0.0;
  double energy = 0.0;
  EvenPolynomial poly;
  int nu = 0;
  /// |c_{n+1}| and |c_{n+2}| from the recurrence at lambda, relative to the
  /// largest retained |c_j|.
  double tail = 0.0;
};

/// Builds the state for sector (n, s, g) at an arbitrary lambda. Used for
/// the roots themselves and for deliberately perturbed negative controls;
/// no node-law or termination check is applied.
ExactState make_state(int n, int i, Parity s, double g, double lambda);

/// All n+1 exact states of the sector, ordered by i (ascending lambda).
/// Throws InvariantViolation if a state breaks nu = 2(i-1)+s or the series
/// fails to terminate.
std::vector<ExactState> exact_states(int n, Parity s, double g);

/// Nodes of x^s p(x) on the real line: s plus two for every simple positive
/// root of q(t). Throws DegenerateNode for a root at t = 0 or a repeated
/// positive root, InvalidParameter for a zero polynomial.
int count_nodes(const EvenPolynomial& p);

struct Residual {
  double max_abs = 0.0;  // largest |coefficient| of (1+gx^2)(H-E)psi e^{x^2/2}
  double scale = 0.0;    // largest summed |contribution| to a coefficient
  double relative() const noexcept { return scale > 0.0 ? max_abs / scale : max_abs; }
};

/// (1 + g x^2) (H - E) psi / e^{-x^2/2} expanded as a polynomial in x.
Residual residual_check(const ExactState& st);

/// x^s p(x) e^{-x^2/2}, unnormalized.
double eval_wavefunction(const ExactState& st, double x);

}  // namespace ratpot
