#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace ratpot {

/// Dense real polynomial, coefficients in ascending powers.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  /// Degree of the stored coefficient vector (exact zeros at the top are
  /// trimmed). The zero polynomial has degree 0.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  double operator[](int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0.0;
  }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  double leading() const noexcept { return coeffs_.back(); }
  double max_abs_coefficient() const noexcept;
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  double operator()(double x) const noexcept;
  std::complex<double> operator()(std::complex<double> z) const noexcept;

  Polynomial derivative() const;

  /// Exact division by t: drops the constant term, which the caller asserts
  /// is negligible.
  Polynomial deflate_zero_root() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(double k);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, double k) { return a *= k; }
  friend Polynomial operator*(double k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  std::vector<double> coeffs_{0.0};
};

/// All complex roots of p from the eigenvalues of its companion matrix.
/// The variable is rescaled by the geometric mean root magnitude first so
/// that the companion entries stay O(1). Throws InvalidParameter for a
/// constant polynomial.
std::vector<std::complex<double>> companion_roots(const Polynomial& p);

/// Newton iterations on a real root estimate; stops early when the step no
/// longer shrinks.
double newton_polish(const Polynomial& p, double x, int steps);

}  // namespace ratpot
