#include "ratpot/rayleigh_ritz.hpp"

#include <boost/math/constants/constants.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratpot/errors.hpp"
#include "ratpot/grid_oracle.hpp"

namespace ratpot {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

void validate_spec(const RRBasisSpec& spec) {
  if (spec.size < 1) throw InvalidParameter("basis size must be >= 1");
  validate(ModelParams{spec.g, 0.0, spec.s});
}

int sector_index(int nu, Parity s) {
  if (nu < 0 || nu % 2 != index_of(s)) {
    std::ostringstream os;
    os << "node count " << nu << " does not belong to the " << to_string(s) << " sector";
    throw InvalidParameter(os.str());
  }
  return (nu - index_of(s)) / 2;
}

// Moments M_0..M_kmax, M_{k+1} = M_k (2k+1)/2.
std::vector<Extended> moment_table(int kmax) {
  std::vector<Extended> m(kmax + 1);
  m[0] = boost::math::constants::root_pi<Extended>();
  for (int k = 0; k < kmax; ++k) m[k + 1] = m[k] * (2 * k + 1) / 2;
  return m;
}

// c x^p
struct Term {
  Extended coeff;
  int power;
};

// (d/dx - x) applied to x^m + g x^{m+2}: the factor multiplying e^{-x^2/2}
// in phi'.
std::vector<Term> derivative_terms(int m, const Extended& g) {
  std::vector<Term> t;
  if (m > 0) t.push_back({Extended(m), m - 1});
  t.push_back({g * (m + 2) - 1, m + 1});
  t.push_back({-g, m + 3});
  return t;
}

}  // namespace

Extended gaussian_moment_extended(int k) {
  if (k < 0) throw InvalidParameter("gaussian_moment: k must be >= 0");
  Extended m = boost::math::constants::root_pi<Extended>();
  for (int j = 0; j < k; ++j) {
    m *= Extended(2 * j + 1) / 2;
    if (!boost::multiprecision::isfinite(m)) throw RangeError("gaussian moment overflows");
  }
  return m;
}

double gaussian_moment(int k) {
  if (k < 0) throw InvalidParameter("gaussian_moment: k must be >= 0");
  double m = std::sqrt(boost::math::constants::pi<double>());
  for (int j = 0; j < k; ++j) {
    m *= (2.0 * j + 1.0) / 2.0;
    if (!std::isfinite(m)) {
      std::ostringstream os;
      os << "gaussian moment k=" << k << " overflows double";
      throw RangeError(os.str());
    }
  }
  return m;
}

RRMatrices assemble_matrices(const RRBasisSpec& spec, double lambda) {
  validate_spec(spec);
  if (!std::isfinite(lambda)) throw InvalidParameter("lambda must be finite");
  const int n = spec.size;
  const int sd = index_of(spec.s);
  const Extended g = spec.g;
  const Extended lam = lambda;

  // Highest power: x^{2(2n-2)+2s} times x^6.
  const auto mom_table = moment_table(2 * n + sd + 3);
  auto moment = [&](int p) -> Extended { return p % 2 == 0 ? mom_table[p / 2] : Extended(0); };

  RRMatrices m;
  m.spec = spec;
  m.lambda = lambda;
  m.hamiltonian = ExtendedMatrix(n);
  m.overlap = ExtendedMatrix(n);
  m.rational = ExtendedMatrix(n);
  m.rational_squared = ExtendedMatrix(n);

  for (int a = 0; a < n; ++a) {
    const int ma = 2 * a + sd;
    const auto da = derivative_terms(ma, g);
    for (int b = a; b < n; ++b) {
      const int mb = 2 * b + sd;
      const int p = ma + mb;
      // phi_a phi_b = x^p (1 + g x^2)^2 e^{-x^2}
      const Extended overlap = moment(p) + 2 * g * moment(p + 2) + g * g * moment(p + 4);
      const Extended harmonic = moment(p + 2) + 2 * g * moment(p + 4) + g * g * moment(p + 6);
      // The basis factor (1 + g x^2) cancels the denominator once.
      const Extended rational = moment(p + 2) + g * moment(p + 4);
      const Extended rational_sq = moment(p + 4);

      Extended kinetic = 0;
      for (const Term& ta : da)
        for (const Term& tb : derivative_terms(mb, g)) kinetic += ta.coeff * tb.coeff * moment(ta.power + tb.power);

      const Extended h = kinetic + harmonic + lam * rational;
      m.overlap(a, b) = m.overlap(b, a) = overlap;
      m.hamiltonian(a, b) = m.hamiltonian(b, a) = h;
      m.rational(a, b) = m.rational(b, a) = rational;
      m.rational_squared(a, b) = m.rational_squared(b, a) = rational_sq;
    }
  }
  return m;
}

RRSolution solve_generalized(const RRMatrices& m) {
  const int n = m.overlap.size();
  if (n < 1 || m.hamiltonian.size() != n) throw InvalidParameter("solve_generalized: inconsistent matrices");

  std::vector<Extended> scale(n);
  for (int a = 0; a < n; ++a) {
    if (!(m.overlap(a, a) > 0)) throw ConditioningError("overlap diagonal is not positive", a);
    scale[a] = 1 / sqrt(m.overlap(a, a));
  }
  ExtendedMatrix s(n), h(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s(a, b) = m.overlap(a, b) * scale[a] * scale[b];
      h(a, b) = m.hamiltonian(a, b) * scale[a] * scale[b];
    }

  ExtendedMatrix l;
  if (const int pivot = cholesky(s, l); pivot >= 0) {
    std::ostringstream os;
    os << "overlap matrix not positive definite at pivot " << pivot << " (basis size " << n
       << "); largest usable size is " << pivot;
    throw ConditioningError(os.str(), pivot);
  }

  // x = L^{-1} h, column by column.
  ExtendedMatrix x(n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      Extended acc = h(r, c);
      for (int k = 0; k < r; ++k) acc -= l(r, k) * x(k, c);
      x(r, c) = acc / l(r, r);
    }
  // reduced = L^{-1} x^T = L^{-1} h L^{-T} (h symmetric).
  ExtendedMatrix reduced(n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      Extended acc = x(c, r);
      for (int k = 0; k < r; ++k) acc -= l(r, k) * reduced(k, c);
      reduced(r, c) = acc / l(r, r);
    }
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) reduced(r, c) = reduced(c, r) = (reduced(r, c) + reduced(c, r)) / 2;

  const SymmetricEigen eig = symmetric_eigen(std::move(reduced));

  RRSolution sol;
  sol.matrices = m;
  sol.converged_count = (n + 1) / 2;
  sol.eigenvalues.reserve(n);
  sol.eigenvectors.reserve(n);
  const Extended h_norm = m.hamiltonian.norm_inf();
  Extended worst = 0;

  for (int k = 0; k < n; ++k) {
    // Back-transform: L^T w = y, then undo the diagonal scaling.
    const ExtendedVector& y = eig.vectors[k];
    ExtendedVector v(n);
    for (int r = n - 1; r >= 0; --r) {
      Extended acc = y[r];
      for (int j = r + 1; j < n; ++j) acc -= l(j, r) * v[j];
      v[r] = acc / l(r, r);
    }
    for (int a = 0; a < n; ++a) v[a] *= scale[a];

    const Extended norm = sqrt(dot(v, multiply(m.overlap, v)));
    int pivot = 0;
    for (int a = 1; a < n; ++a)
      if (abs(v[a] * sqrt(m.overlap(a, a))) > abs(v[pivot] * sqrt(m.overlap(pivot, pivot)))) pivot = a;
    const Extended sign = v[pivot] < 0 ? Extended(-1) : Extended(1);
    for (auto& c : v) c *= sign / norm;

    const Extended e = eig.values[k];
    const ExtendedVector hv = multiply(m.hamiltonian, v);
    const ExtendedVector sv = multiply(m.overlap, v);
    Extended res = 0;
    for (int a = 0; a < n; ++a) res = std::max(res, abs(hv[a] - e * sv[a]));
    worst = std::max(worst, res / h_norm);

    sol.eigenvalues.push_back(static_cast<double>(e));
    sol.eigenvectors.push_back(std::move(v));
  }
  sol.max_relative_residual = static_cast<double>(worst);
  return sol;
}

std::vector<double> rr_spectrum(double lambda, double g, Parity s, int basis_size, int count) {
  if (count < 1 || count > basis_size) throw InvalidParameter("rr_spectrum: need 1 <= count <= basis size");
  const RRSolution sol = solve_generalized(assemble_matrices({basis_size, s, g}, lambda));
  return {sol.eigenvalues.begin(), sol.eigenvalues.begin() + count};
}

std::vector<double> rr_convergence_shift(double lambda, double g, Parity s, int basis_size, int count) {
  if (basis_size - 2 < count) throw InvalidParameter("rr_convergence_shift: basis too small for count");
  const auto fine = rr_spectrum(lambda, g, s, basis_size, count);
  const auto coarse = rr_spectrum(lambda, g, s, basis_size - 2, count);
  std::vector<double> shift(count);
  for (int k = 0; k < count; ++k) shift[k] = std::abs(fine[k] - coarse[k]);
  return shift;
}

Expectations expectation_values(const RRSolution& sol, int k) {
  if (k < 0 || k >= sol.size()) throw InvalidParameter("expectation_values: state index out of range");
  const ExtendedVector& v = sol.eigenvectors[k];
  Expectations e;
  e.x2_over_denominator = static_cast<double>(dot(v, multiply(sol.matrices.rational, v)));
  e.x4_over_denominator_squared = static_cast<double>(dot(v, multiply(sol.matrices.rational_squared, v)));
  return e;
}

HftCheck hft_lambda_check(double lambda, double g, Parity s, int nu, double h, int basis_size) {
  if (!(h > 0.0)) throw InvalidParameter("finite-difference step must be > 0");
  const int k = sector_index(nu, s);
  if (k >= basis_size) throw InvalidParameter("hft_lambda_check: nu beyond basis");
  const double up = rr_spectrum(lambda + h, g, s, basis_size, k + 1)[k];
  const double down = rr_spectrum(lambda - h, g, s, basis_size, k + 1)[k];
  const RRSolution sol = solve_generalized(assemble_matrices({basis_size, s, g}, lambda));

  HftCheck c;
  c.fd_slope = (up - down) / (2.0 * h);
  c.hft_value = expectation_values(sol, k).x2_over_denominator;
  c.abs_diff = std::abs(c.fd_slope - c.hft_value);
  return c;
}

HftCheck hft_g_check(double lambda, double g, Parity s, int nu, double h, int basis_size,
                     const GridSpec& grid) {
  if (!(h > 0.0)) throw InvalidParameter("finite-difference step must be > 0");
  if (!(g - h > 0.0)) throw InvalidParameter("hft_g_check: need g - h > 0");
  const int k = sector_index(nu, s);

  GridSpec up = grid;
  up.params = ModelParams{g + h, lambda, s};
  GridSpec down = grid;
  down.params = ModelParams{g - h, lambda, s};
  const double e_up = grid_energies(up, nu + 1)[nu];
  const double e_down = grid_energies(down, nu + 1)[nu];
  const RRSolution sol = solve_generalized(assemble_matrices({basis_size, s, g}, lambda));

  HftCheck c;
  c.fd_slope = (e_up - e_down) / (2.0 * h);
  c.hft_value = -lambda * expectation_values(sol, k).x4_over_denominator_squared;
  c.abs_diff = std::abs(c.fd_slope - c.hft_value);
  return c;
}

HftCheck hft_g_check(double lambda, double g, Parity s, int nu, double h, int basis_size) {
  return hft_g_check(lambda, g, s, nu, h, basis_size, GridSpec{});
}

}  // namespace ratpot
