#include "ratpot/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ratpot/errors.hpp"

namespace ratpot {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  trim();
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial{0.0};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::deflate_zero_root() const {
  if (coeffs_.size() == 1) return Polynomial{0.0};
  return Polynomial(std::vector<double>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double k) {
  for (double& c : coeffs_) c *= k;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

std::vector<std::complex<double>> companion_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw InvalidParameter("companion_roots: polynomial has no roots");
  if (p[0] == 0.0) {
    // Factor out exact zero roots so the rescaling below stays finite.
    auto roots = companion_roots(p.deflate_zero_root());
    roots.emplace_back(0.0, 0.0);
    return roots;
  }

  // x = scale * y maps roots to magnitude ~1.
  const double scale = std::pow(std::abs(p[0] / p.leading()), 1.0 / n);
  std::vector<double> monic(n);
  double power = 1.0;
  for (int k = 0; k < n; ++k) {
    monic[k] = p[k] * power / (p.leading() * std::pow(scale, n));
    power *= scale;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -monic[k];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw SolverFailure("companion matrix eigensolver did not converge");

  std::vector<std::complex<double>> roots;
  roots.reserve(n);
  for (int k = 0; k < n; ++k) roots.push_back(solver.eigenvalues()[k] * scale);
  return roots;
}

double newton_polish(const Polynomial& p, double x, int steps) {
  const Polynomial dp = p.derivative();
  double last_step = INFINITY;
  for (int it = 0; it < steps; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    const double step = p(x) / d;
    if (!std::isfinite(step) || std::abs(step) >= last_step) break;
    x -= step;
    last_step = std::abs(step);
  }
  return x;
}

}  // namespace ratpot
