#include "ratpot/model.hpp"

#include <cmath>
#include <string>

#include "ratpot/errors.hpp"

namespace ratpot {

Parity parity_from_index(int s) {
  if (s == 0) return Parity::even;
  if (s == 1) return Parity::odd;
  throw InvalidParameter("parity index must be 0 or 1, got " + std::to_string(s));
}

const char* to_string(Parity s) noexcept {
  return s == Parity::even ? "even" : "odd";
}

void validate_coupling(double g) {
  if (!std::isfinite(g) || g <= 0.0)
    throw InvalidParameter("coupling g must be finite and > 0, got " + std::to_string(g));
}

void validate(const PhysicalParams& p) {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
      throw InvalidParameter(std::string(name) + " must be finite and > 0");
  };
  positive(p.mass, "mass");
  positive(p.hbar, "hbar");
  positive(p.v1, "V1");
  if (!std::isfinite(p.v2)) throw InvalidParameter("V2 must be finite");
  if (!std::isfinite(p.x0) || p.x0 == 0.0) throw InvalidParameter("x0 must be finite and nonzero");
}

void validate(const ModelParams& p) {
  validate_coupling(p.g);
  if (!std::isfinite(p.lambda)) throw InvalidParameter("lambda must be finite");
  if (p.s != Parity::even && p.s != Parity::odd) throw InvalidParameter("parity must be even or odd");
}

Reduction reduce_to_dimensionless(const PhysicalParams& p) {
  validate(p);
  const double x0_sq = p.x0 * p.x0;
  const double two_m_v1 = 2.0 * p.mass * p.v1;
  Reduction r;
  r.length_unit = std::pow(p.hbar * p.hbar / two_m_v1, 0.25);
  r.lambda = p.v2 / (p.v1 * x0_sq);
  r.g = p.hbar / (std::sqrt(two_m_v1) * x0_sq);
  r.energy_unit = p.hbar * std::sqrt(p.v1 / (2.0 * p.mass));
  return r;
}

double potential(double x, const ModelParams& p) {
  const double x2 = x * x;
  return x2 + p.lambda * x2 / (1.0 + p.g * x2);
}

}  // namespace ratpot
