#pragma once

#include <vector>

#include "ratpot/model.hpp"
#include "ratpot/polynomial.hpp"

namespace ratpot {

/// One step of c_{j+2} = A_j c_{j+1} + B_j c_j with the energy eliminated
/// through the termination condition for a degree-n sector. A_j is linear in
/// lambda; B_j does not depend on lambda and vanishes at j = n.
struct RecurrenceCoeffs {
  int j = 0;
  Polynomial a;  // in lambda
  double b = 0.0;
};

/// Recurrence coefficients for a given energy, before the termination
/// condition is imposed.
struct NumericRecurrenceCoeffs {
  double a = 0.0;
  double b = 0.0;
};

/// A c_j expressed as a polynomial in lambda for fixed (n, s, g).
struct LambdaPolynomial {
  int index = 0;  // j in c_j
  int n = 0;
  Parity s = Parity::even;
  double g = 1.0;
  Polynomial poly;

  int degree() const noexcept { return poly.degree(); }
  double operator()(double lambda) const noexcept { return poly(lambda); }
};

/// E = 4n + 2s + 1 + lambda/g.
double termination_energy(int n, Parity s, double g, double lambda);

/// A_j, B_j for an arbitrary energy E (j >= -1).
NumericRecurrenceCoeffs recurrence_coeffs(int j, Parity s, double g, double lambda, double energy);

/// A_j, B_j after substituting the degree-n termination energy (j >= -1).
RecurrenceCoeffs terminated_recurrence_coeffs(int j, int n, Parity s, double g);

/// c_0 ... c_{n+1} as polynomials in lambda. The recurrence is started at
/// j = -1 with c_{-1} = 0 and c_0 = 1.
std::vector<LambdaPolynomial> coefficient_polynomials(int n, Parity s, double g);

/// Numeric c_0 ... c_{count-1} for the degree-n sector at a given lambda.
std::vector<double> series_coefficients(int n, Parity s, double g, double lambda, int count);

/// The n+1 roots of c_{n+1}(lambda), ascending; the last is exactly 0.
/// Throws QuantizationFailure if a root is complex, positive, or not
/// separated from its neighbours.
std::vector<double> quantization_roots(int n, Parity s, double g);

}  // namespace ratpot
