#pragma once

// Test-only reference computations. Nothing here calls into the library's
// assembly or root-finding paths.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

namespace ratpot::testing {

/// Adaptive Gauss-Kronrod over [-limit, limit]; integrands here decay like
/// e^{-x^2}, so the truncation is far below double precision.
inline double integrate_line(const std::function<double(double)>& f, double limit = 25.0) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -limit, limit, 20, 1e-15, &error);
}

/// Basis function x^{m} (1 + g x^2) e^{-x^2/2}, m = 2j + s.
inline double basis_value(int m, double g, double x) {
  return std::pow(x, m) * (1.0 + g * x * x) * std::exp(-0.5 * x * x);
}

/// Its first derivative by the product rule.
inline double basis_derivative(int m, double g, double x) {
  const double poly = std::pow(x, m) * (1.0 + g * x * x);
  const double dpoly = (m > 0 ? m * std::pow(x, m - 1) : 0.0) + g * (m + 2) * std::pow(x, m + 1);
  return (dpoly - x * poly) * std::exp(-0.5 * x * x);
}

/// Closed-form quantization roots for n = 1 and n = 2.
inline double lambda_1_1(int s, double g) { return -2.0 * g * (g * (2 * s + 1) + 2.0); }

inline double root_2_discriminant(int s, double g) {
  return std::sqrt(g * g * (4.0 * s * s + 20.0 * s + 25.0) + 4.0 * g * (2.0 * s - 3.0) + 4.0);
}
inline double lambda_2_1(int s, double g) { return -g * (root_2_discriminant(s, g) + g * (6 * s + 7) + 6.0); }
inline double lambda_2_2(int s, double g) { return g * (root_2_discriminant(s, g) - g * (6 * s + 7) - 6.0); }

/// Number of sign changes of f on a uniform grid over (a, b).
inline int sign_changes(const std::function<double(double)>& f, double a, double b, int samples) {
  int changes = 0;
  double prev = f(a + (b - a) / samples);
  for (int k = 2; k < samples; ++k) {
    const double v = f(a + (b - a) * k / samples);
    if (v == 0.0) continue;
    if ((v > 0.0) != (prev > 0.0)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace ratpot::testing
