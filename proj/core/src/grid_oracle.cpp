#include "ratpot/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ratpot/errors.hpp"

namespace ratpot {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;  // constant sub/super diagonal
  std::vector<double> x;
};

void validate_grid(const GridSpec& spec) {
  if (!std::isfinite(spec.half_width) || spec.half_width <= 0.0)
    throw InvalidParameter("grid half width must be > 0");
  if (spec.points < 3) throw InvalidParameter("grid needs at least 3 points");
  validate(spec.params);
}

Tridiagonal build(const GridSpec& spec) {
  const double h = spec.spacing();
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.off = -inv_h2;
  t.diag.resize(spec.points);
  t.x.resize(spec.points);
  for (int i = 0; i < spec.points; ++i) {
    // Symmetric about 0 by construction: x_i = -x_{N-1-i}.
    const double x = h * (i - 0.5 * (spec.points - 1));
    t.x[i] = x;
    t.diag[i] = 2.0 * inv_h2 + potential(x, spec.params);
  }
  return t;
}

int sturm_count(const Tridiagonal& t, double shift) {
  const double off2 = t.off * t.off;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int negatives = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    q = t.diag[i] - shift - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

double bisect(const Tridiagonal& t, int k, double lo, double hi) {
  // Invariant: count(lo) <= k < count(hi).
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift) y = b by Gaussian elimination with partial pivoting.
std::vector<double> shifted_solve(const Tridiagonal& t, double shift, std::vector<double> b) {
  const std::size_t n = t.diag.size();
  std::vector<double> d(n), du(n - 1, t.off), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<double> dl(n - 1, t.off);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
  const double tiny = std::numeric_limits<double>::epsilon() * std::abs(t.off);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double old_diag = d[i + 1];
      d[i + 1] = du[i] - fact * old_diag;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      du[i] = old_diag;
      std::swap(b[i], b[i + 1]);
      b[i + 1] -= fact * b[i];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;

  std::vector<double> y(n);
  y[n - 1] = b[n - 1] / d[n - 1];
  if (n >= 2) y[n - 2] = (b[n - 2] - du[n - 2] * y[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) y[i] = (b[i] - du[i] * y[i + 1] - du2[i] * y[i + 2]) / d[i];
  return y;
}

Parity eigenvector_parity(const Tridiagonal& t, double energy) {
  const std::size_t n = t.diag.size();
  std::vector<double> v(n);
  const double width = std::abs(t.x.front());
  // Mixed-parity start so neither symmetry class is suppressed.
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + t.x[i] / width;
  for (int it = 0; it < 3; ++it) {
    v = shifted_solve(t, energy, std::move(v));
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;
  }
  double mirror = 0.0;
  for (std::size_t i = 0; i < n; ++i) mirror += v[i] * v[n - 1 - i];
  return mirror >= 0.0 ? Parity::even : Parity::odd;
}

}  // namespace

int grid_sturm_count(const GridSpec& spec, double shift) {
  validate_grid(spec);
  return sturm_count(build(spec), shift);
}

std::vector<double> grid_energies(const GridSpec& spec, int count) {
  validate_grid(spec);
  if (count < 1 || count >= spec.points)
    throw InvalidParameter("grid_spectrum: need 1 <= count < points");
  const Tridiagonal t = build(spec);

  // Gershgorin bounds.
  const double radius = 2.0 * std::abs(t.off);
  const double lo = *std::min_element(t.diag.begin(), t.diag.end()) - radius;
  const double hi = *std::max_element(t.diag.begin(), t.diag.end()) + radius;

  std::vector<double> energies;
  energies.reserve(count);
  double lower = lo;
  for (int k = 0; k < count; ++k) {
    const double e = bisect(t, k, lower, hi);
    // Tunnelling doublets in deep double wells can collapse to one value at
    // this resolution; only a decrease is an error.
    if (!energies.empty() && e < energies.back()) {
      std::ostringstream os;
      os << "grid eigenvalues decreasing at index " << k << ": " << energies.back() << ", " << e;
      throw SolverFailure(os.str());
    }
    energies.push_back(e);
    lower = e;
  }
  return energies;
}

std::vector<GridLevel> grid_spectrum(const GridSpec& spec, int count) {
  const auto energies = grid_energies(spec, count);
  const Tridiagonal t = build(spec);
  std::vector<GridLevel> levels;
  levels.reserve(energies.size());
  for (double e : energies) levels.push_back({e, eigenvector_parity(t, e)});
  return levels;
}

}  // namespace ratpot
