#include "ratpot/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ratpot/errors.hpp"

namespace ratpot {

namespace {

constexpr double kRealnessTolerance = 1e-9;
constexpr double kDistinctTolerance = 1e-8;
constexpr int kNewtonSteps = 2;

void validate_sector(int n, Parity s, double g) {
  if (n < 0) throw InvalidParameter("sector degree n must be >= 0, got " + std::to_string(n));
  validate(ModelParams{g, 0.0, s});
}

// 2 (j+2) (2j+2s+3), the common denominator of A_j and B_j.
double recurrence_denominator(int j, Parity s) {
  const double sd = index_of(s);
  return 2.0 * (j + 2) * (2.0 * j + 2.0 * sd + 3.0);
}

}  // namespace

double termination_energy(int n, Parity s, double g, double lambda) {
  validate_sector(n, s, g);
  return 4.0 * n + 2.0 * index_of(s) + 1.0 + lambda / g;
}

NumericRecurrenceCoeffs recurrence_coeffs(int j, Parity s, double g, double lambda, double energy) {
  if (j < -1) throw InvalidParameter("recurrence index must be >= -1");
  validate_coupling(g);
  const double sd = index_of(s);
  const double den = recurrence_denominator(j, s);
  NumericRecurrenceCoeffs c;
  c.a = -(energy + 2.0 * g * (j + 1) * (2.0 * j + 2.0 * sd + 1.0) - 4.0 * j - 2.0 * sd - 5.0) / den;
  c.b = -(energy * g - g * (4.0 * j + 2.0 * sd + 1.0) - lambda) / den;
  return c;
}

RecurrenceCoeffs terminated_recurrence_coeffs(int j, int n, Parity s, double g) {
  if (j < -1) throw InvalidParameter("recurrence index must be >= -1");
  validate_sector(n, s, g);
  const double sd = index_of(s);
  const double den = recurrence_denominator(j, s);
  const double a0 = -(2.0 * g * g * (j + 1) * (2.0 * j + 2.0 * sd + 1.0) - 4.0 * g * (j - n + 1)) / (g * den);
  const double a1 = -1.0 / (g * den);
  RecurrenceCoeffs c;
  c.j = j;
  c.a = Polynomial{a0, a1};
  c.b = 4.0 * g * (j - n) / den;
  return c;
}

std::vector<LambdaPolynomial> coefficient_polynomials(int n, Parity s, double g) {
  validate_sector(n, s, g);
  std::vector<LambdaPolynomial> out;
  out.reserve(n + 2);
  Polynomial previous{0.0};  // c_{-1}
  Polynomial current{1.0};   // c_0
  out.push_back({0, n, s, g, current});
  for (int j = -1; j < n; ++j) {
    const RecurrenceCoeffs rc = terminated_recurrence_coeffs(j, n, s, g);
    Polynomial next = rc.a * current + previous * rc.b;
    previous = std::move(current);
    current = std::move(next);
    out.push_back({j + 2, n, s, g, current});
  }
  return out;
}

std::vector<double> series_coefficients(int n, Parity s, double g, double lambda, int count) {
  validate_sector(n, s, g);
  if (count < 1) throw InvalidParameter("series_coefficients: count must be >= 1");
  std::vector<double> c;
  c.reserve(count);
  c.push_back(1.0);
  double previous = 0.0;
  for (int j = -1; static_cast<int>(c.size()) < count; ++j) {
    const RecurrenceCoeffs rc = terminated_recurrence_coeffs(j, n, s, g);
    const double next = rc.a(lambda) * c.back() + rc.b * previous;
    previous = c.back();
    c.push_back(next);
  }
  return c;
}

std::vector<double> quantization_roots(int n, Parity s, double g) {
  const auto polys = coefficient_polynomials(n, s, g);
  const Polynomial& condition = polys.back().poly;
  if (condition.degree() != n + 1) {
    std::ostringstream os;
    os << "c_" << n + 1 << " has degree " << condition.degree() << " in lambda, expected " << n + 1;
    throw QuantizationFailure(os.str());
  }
  if (std::abs(condition[0]) > 1e-12 * condition.max_abs_coefficient())
    throw QuantizationFailure("c_{n+1}(0) does not vanish");

  std::vector<double> roots;
  roots.reserve(n + 1);
  if (n > 0) {
    const Polynomial cofactor = condition.deflate_zero_root();
    for (const auto& z : companion_roots(cofactor)) {
      if (std::abs(z.imag()) > kRealnessTolerance * std::max(1.0, std::abs(z.real()))) {
        std::ostringstream os;
        os << "complex quantization root " << z.real() << (z.imag() < 0 ? " - " : " + ")
           << std::abs(z.imag()) << "i for n=" << n << ", s=" << index_of(s) << ", g=" << g;
        throw QuantizationFailure(os.str());
      }
      roots.push_back(newton_polish(condition, z.real(), kNewtonSteps));
    }
  }
  roots.push_back(0.0);
  std::sort(roots.begin(), roots.end());

  for (double r : roots) {
    if (r > 0.0) {
      std::ostringstream os;
      os << "positive quantization root " << r << " for n=" << n << ", s=" << index_of(s) << ", g=" << g;
      throw QuantizationFailure(os.str());
    }
  }
  const double spread = roots.back() - roots.front();
  for (std::size_t k = 1; k < roots.size(); ++k) {
    if (roots[k] - roots[k - 1] <= kDistinctTolerance * spread) {
      std::ostringstream os;
      os << "quantization roots " << roots[k - 1] << " and " << roots[k] << " are not distinct";
      throw QuantizationFailure(os.str());
    }
  }
  return roots;
}

}  // namespace ratpot
