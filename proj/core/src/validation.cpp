#include "ratpot/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "ratpot/errors.hpp"
#include "ratpot/exact_spectrum.hpp"
#include "ratpot/grid_oracle.hpp"
#include "ratpot/rayleigh_ritz.hpp"
#include "ratpot/recurrence.hpp"

namespace ratpot {

namespace {

constexpr Parity kParities[] = {Parity::even, Parity::odd};

struct Grid {
  int n_max;
  std::vector<double> couplings;
};

CheckResult make_check(std::string name, double value, double tolerance, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.tolerance = tolerance;
  c.passed = std::isfinite(value) && value <= tolerance;
  c.detail = std::move(detail);
  return c;
}

// Runs body, turning library errors into a failed check.
CheckResult guarded(const std::string& name, double tolerance, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return make_check(name, INFINITY, tolerance, e.what());
  }
}

std::string where(int n, int i, Parity s, double g) {
  std::ostringstream os;
  os << "n=" << n << " i=" << i << " s=" << index_of(s) << " g=" << g;
  return os.str();
}

}  // namespace

bool ValidationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validation(const ValidationOptions& options) {
  const Grid exact_grid = options.quick ? Grid{3, {0.5, 1.0}} : Grid{6, {0.2, 0.5, 1.0, 2.0}};
  const int root_n_max = options.quick ? 4 : 8;
  ValidationReport report;

  report.checks.push_back(guarded("node law nu = 2(i-1)+s", 0.0, [&] {
    double violations = 0;
    std::string detail;
    for (double g : exact_grid.couplings)
      for (Parity s : kParities)
        for (int n = 0; n <= exact_grid.n_max; ++n)
          for (const auto& st : exact_states(n, s, g))
            if (st.nu != 2 * (st.i - 1) + index_of(s)) {
              ++violations;
              detail = where(n, st.i, s, g);
            }
    return make_check("node law nu = 2(i-1)+s", violations, 0.0, detail);
  }));

  report.checks.push_back(guarded("quantization condition at roots", 1e-10, [&] {
    double worst = 0.0;
    std::string detail;
    for (double g : exact_grid.couplings)
      for (Parity s : kParities)
        for (int n = 0; n <= root_n_max; ++n) {
          const auto c = coefficient_polynomials(n, s, g).back();
          for (double r : quantization_roots(n, s, g)) {
            // Backward error: |c(r)| against the magnitude of the terms summed.
            // At r = 0 only the constant term survives, so compare it with
            // the coefficient scale instead.
            double magnitude = 0.0;
            for (int k = 0; k <= c.degree(); ++k) magnitude += std::abs(c.poly[k] * std::pow(r, k));
            if (r == 0.0) magnitude = c.poly.max_abs_coefficient();
            const double v = std::abs(c(r)) / magnitude;
            if (v > worst) {
              worst = v;
              detail = where(n, 0, s, g) + " lambda=" + std::to_string(r);
            }
          }
        }
    return make_check("quantization condition at roots", worst, 1e-10, detail);
  }));

  report.checks.push_back(guarded("exact-state residual (relative)", 1e-10, [&] {
    double worst = 0.0;
    std::string detail;
    for (double g : exact_grid.couplings)
      for (Parity s : kParities)
        for (int n = 0; n <= exact_grid.n_max; ++n)
          for (const auto& st : exact_states(n, s, g)) {
            const ExactState probe = options.lambda_perturbation == 0.0
                                         ? st
                                         : make_state(n, st.i, s, g, st.lambda + options.lambda_perturbation);
            const double v = residual_check(probe).relative();
            if (v > worst) {
              worst = v;
              detail = where(n, st.i, s, g);
            }
          }
    return make_check("exact-state residual (relative)", worst, 1e-10, detail);
  }));

  report.checks.push_back(guarded("harmonic points E = 4n+2s+1", 1e-12, [&] {
    double worst = 0.0;
    for (Parity s : kParities)
      for (int n = 0; n <= exact_grid.n_max; ++n) {
        const auto st = exact_states(n, s, 1.0).back();
        worst = std::max(worst, std::abs(st.energy - (4.0 * n + 2.0 * index_of(s) + 1.0)));
      }
    return make_check("harmonic points E = 4n+2s+1", worst, 1e-12);
  }));

  report.checks.push_back(guarded("RR exact for n=1, i=1", 1e-9, [&] {
    double worst = 0.0;
    std::string detail;
    for (double g : {0.2, 0.5, 1.0, 2.0})
      for (Parity s : kParities) {
        const double lambda = quantization_roots(1, s, g).front();
        const double e = rr_spectrum(lambda, g, s, kDefaultBasisSize, 1)[0];
        const double v = std::abs(e - termination_energy(1, s, g, lambda));
        if (v > worst) {
          worst = v;
          detail = where(1, 1, s, g);
        }
      }
    return make_check("RR exact for n=1, i=1", worst, 1e-9, detail);
  }));

  const std::vector<std::pair<double, double>> oracle_points =
      options.quick ? std::vector<std::pair<double, double>>{{-6.0, 1.0}}
                    : std::vector<std::pair<double, double>>{{-2.0, 1.0}, {-6.0, 1.0}, {0.0, 0.5}, {-10.0, 2.0}};
  const int levels = 6;

  report.checks.push_back(guarded("RR bounds grid from above", 1e-6, [&] {
    double worst = 0.0;
    std::string detail;
    for (const auto& [lambda, g] : oracle_points) {
      const auto grid = grid_energies(GridSpec{kDefaultGridHalfWidth, kDefaultGridPoints, {g, lambda}}, levels);
      for (Parity s : kParities) {
        const auto rr = rr_spectrum(lambda, g, s, kDefaultBasisSize, levels / 2);
        for (int k = 0; k < levels / 2; ++k) {
          const double v = grid[2 * k + index_of(s)] - rr[k];
          if (v > worst) {
            worst = v;
            detail = "lambda=" + std::to_string(lambda) + " g=" + std::to_string(g);
          }
        }
      }
    }
    return make_check("RR bounds grid from above", worst, 1e-6, detail);
  }));

  report.checks.push_back(guarded("grid parity alternates", 0.0, [&] {
    double bad = 0;
    for (const auto& [lambda, g] : oracle_points) {
      const auto levels_found = grid_spectrum(GridSpec{kDefaultGridHalfWidth, kDefaultGridPoints, {g, lambda}}, levels);
      for (int k = 0; k < levels; ++k)
        if (index_of(levels_found[k].parity) != k % 2) ++bad;
    }
    return make_check("grid parity alternates", bad, 0.0);
  }));

  report.checks.push_back(guarded("grid reproduces exact states (nu <= 9, g = 1)", 1e-5, [&] {
    double worst = 0.0;
    std::string detail;
    const int n_max = options.quick ? 2 : 5;
    for (Parity s : kParities)
      for (int n = 0; n <= n_max; ++n)
        for (const auto& st : exact_states(n, s, 1.0)) {
          if (st.nu > 9) continue;
          const auto e = grid_energies(GridSpec{kDefaultGridHalfWidth, kDefaultGridPoints, {1.0, st.lambda}}, st.nu + 1);
          const double v = std::abs(e[st.nu] - st.energy);
          if (v > worst) {
            worst = v;
            detail = where(n, st.i, s, 1.0);
          }
        }
    return make_check("grid reproduces exact states (nu <= 9, g = 1)", worst, 1e-5, detail);
  }));

  report.checks.push_back(guarded("variational monotonicity in N", 1e-12, [&] {
    double worst = 0.0;
    std::vector<double> previous;
    for (int size = 6; size <= kDefaultBasisSize; size += 4) {
      const auto e = rr_spectrum(-6.0, 1.0, Parity::even, size, 3);
      if (!previous.empty())
        for (int k = 0; k < 3; ++k) worst = std::max(worst, e[k] - previous[k]);
      previous = e;
    }
    return make_check("variational monotonicity in N", worst, 1e-12);
  }));

  report.checks.push_back(guarded("Hellmann-Feynman in lambda", 1e-5, [&] {
    double worst = 0.0;
    std::string detail;
    for (const auto& [lambda, g] : std::vector<std::pair<double, double>>{{-2.0, 1.0}, {-6.0, 1.0}}) {
      for (int nu = 0; nu <= (options.quick ? 1 : 2); ++nu) {
        const auto c = hft_lambda_check(lambda, g, parity_from_index(nu % 2), nu, 1e-3);
        const double v = (c.fd_slope > 0.0 && c.hft_value > 0.0) ? c.abs_diff : INFINITY;
        if (v > worst) {
          worst = v;
          detail = "lambda=" + std::to_string(lambda) + " nu=" + std::to_string(nu);
        }
      }
    }
    return make_check("Hellmann-Feynman in lambda", worst, 1e-5, detail);
  }));

  report.checks.push_back(guarded("Hellmann-Feynman in g", 1e-3, [&] {
    const auto c = hft_g_check(-6.0, 1.0, Parity::even, 0, 1e-3);
    const double v = c.hft_value > 0.0 ? c.abs_diff : INFINITY;
    return make_check("Hellmann-Feynman in g", v, 1e-3);
  }));

  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  value=" << c.value << "  tol=" << c.tolerance
       << "  margin=" << c.margin();
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << '\n';
  }
  os << (report.passed() ? "all checks passed" : "validation FAILED") << '\n';
  return os.str();
}

}  // namespace ratpot
