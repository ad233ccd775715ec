// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "ratpot/errors.hpp"
#include "ratpot/exact_spectrum.hpp"
#include "ratpot/figures.hpp"
#include "ratpot/grid_oracle.hpp"
#include "ratpot/rayleigh_ritz.hpp"
#include "ratpot/recurrence.hpp"
#include "support/oracles.hpp"

using namespace ratpot;
namespace t = ratpot::testing;

namespace {

const double kCouplings[] = {0.2, 0.5, 1.0, 2.0};
const Parity kParities[] = {Parity::even, Parity::odd};

struct Outcome {
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& w) {
    if (!(v <= value)) {  // NaN counts as worst
      value = v;
      where = w;
    }
  }
};

std::string at(double lambda, double g, int s = -1, int nu = -1) {
  char buf[96];
  if (nu >= 0)
    std::snprintf(buf, sizeof buf, "lambda=%.10g g=%g s=%d nu=%d", lambda, g, s, nu);
  else if (s >= 0)
    std::snprintf(buf, sizeof buf, "lambda=%.10g g=%g s=%d", lambda, g, s);
  else
    std::snprintf(buf, sizeof buf, "lambda=%.10g g=%g", lambda, g);
  return buf;
}

Outcome within(const Worst& w, double tol) { return {w.value <= tol, w.value, tol, w.where}; }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); }

Outcome closed_form_n1() {
  Worst w;
  for (Parity s : kParities)
    for (double g : kCouplings) {
      const auto r = quantization_roots(1, s, g);
      const double expected[] = {t::lambda_1_1(index_of(s), g), 0.0};
      if (r.size() != 2) return {false, INFINITY, 1e-12, "wrong root count " + at(0, g, index_of(s))};
      for (int k = 0; k < 2; ++k) w.update(rel(r[k], expected[k]), at(expected[k], g, index_of(s)));
    }
  return within(w, 1e-12);
}

Outcome closed_form_n2() {
  Worst w;
  for (Parity s : kParities)
    for (double g : kCouplings) {
      const int si = index_of(s);
      const auto r = quantization_roots(2, s, g);
      const double expected[] = {t::lambda_2_1(si, g), t::lambda_2_2(si, g), 0.0};
      if (r.size() != 3) return {false, INFINITY, 1e-10, "wrong root count " + at(0, g, si)};
      for (int k = 0; k < 3; ++k) w.update(rel(r[k], expected[k]), at(expected[k], g, si));
    }
  const auto r = quantization_roots(2, Parity::even, 1.0);
  const double numeric[] = {-(13.0 + std::sqrt(17.0)), std::sqrt(17.0) - 13.0, 0.0};
  for (int k = 0; k < 3; ++k) w.update(rel(r[k], numeric[k]), "numeric g=1 s=0");
  return within(w, 1e-10);
}

Outcome node_law() {
  int violations = 0, states = 0;
  std::string where;
  for (int n = 0; n <= 6; ++n)
    for (Parity s : kParities)
      for (double g : kCouplings) {
        // quantization_roots enforces real, distinct, non-positive roots;
        // exact_states enforces the node law and termination.
        try {
          const auto roots = quantization_roots(n, s, g);
          for (std::size_t k = 1; k < roots.size(); ++k)
            if (!(roots[k] > roots[k - 1])) ++violations;
          if (roots.empty() || roots.back() > 0.0 || static_cast<int>(roots.size()) != n + 1) ++violations;
          for (const auto& st : exact_states(n, s, g)) {
            ++states;
            if (st.nu != 2 * (st.i - 1) + index_of(s) || count_nodes(st.poly) != st.nu) {
              ++violations;
              where = at(st.lambda, g, index_of(s), st.nu);
            }
          }
        } catch (const Error& e) {
          ++violations;
          where = e.what();
        }
      }
  return {violations == 0, static_cast<double>(violations), 0.0, std::to_string(states) + " states " + where};
}

Outcome rr_through_exact_points() {
  Worst w;
  for (Parity s : kParities) {
    const int si = index_of(s);
    const int nu_max = si == 0 ? 8 : 9;
    for (int n = 0; n <= 8; ++n)
      for (const auto& st : exact_states(n, s, 1.0)) {
        if (st.nu > nu_max) continue;
        const int k = (st.nu - si) / 2;
        const double e = rr_spectrum(st.lambda, 1.0, s, kDefaultBasisSize, k + 1)[k];
        w.update(std::abs(e - st.energy), at(st.lambda, 1.0, si, st.nu));
      }
  }
  return within(w, 1e-4);
}

Outcome span_exactness() {
  Worst w;
  for (Parity s : kParities)
    for (double g : kCouplings) {
      const int si = index_of(s);
      const double lambda = t::lambda_1_1(si, g);
      const double exact = 4.0 + 2 * si + 1 + lambda / g;
      w.update(std::abs(rr_spectrum(lambda, g, s, kDefaultBasisSize, 1)[0] - exact), at(lambda, g, si));
    }
  return within(w, 1e-9);
}

Outcome oracle_agreement() {
  Worst rr, harmonic;
  const std::pair<double, double> points[] = {{-2.0, 1.0}, {-6.0, 1.0}, {0.0, 0.5}, {-10.0, 2.0}};
  for (auto [lambda, g] : points) {
    const auto grid = grid_spectrum(GridSpec{kDefaultGridHalfWidth, kDefaultGridPoints, {g, lambda}}, 5);
    const auto even = rr_spectrum(lambda, g, Parity::even, kDefaultBasisSize, 3);
    const auto odd = rr_spectrum(lambda, g, Parity::odd, kDefaultBasisSize, 2);
    for (int k = 0; k < 5; ++k) {
      const double e = k % 2 == 0 ? even[k / 2] : odd[k / 2];
      const bool parity_ok = grid[k].parity == parity_from_index(k % 2);
      rr.update(parity_ok ? std::abs(grid[k].energy - e) : INFINITY, at(lambda, g, k % 2, k));
    }
  }
  const auto h = grid_energies(GridSpec{kDefaultGridHalfWidth, kDefaultGridPoints, {1.0, 0.0}}, 4);
  for (int k = 0; k < 4; ++k) harmonic.update(std::abs(h[k] - (2 * k + 1)), "harmonic nu=" + std::to_string(k));
  const bool ok = rr.value <= 1e-4 && harmonic.value <= 1e-5;
  char buf[160];
  std::snprintf(buf, sizeof buf, "RR %s; harmonic %.3e (tol 1e-05) at %s", rr.where.c_str(), harmonic.value,
                harmonic.where.c_str());
  return {ok, rr.value, 1e-4, buf};
}

Outcome hft_lambda() {
  Worst w;
  bool positive = true;
  for (auto [lambda, g] : {std::pair{-2.0, 1.0}, std::pair{-6.0, 1.0}})
    for (int nu = 0; nu <= 2; ++nu) {
      const auto c = hft_lambda_check(lambda, g, parity_from_index(nu % 2), nu, 1e-3);
      positive = positive && c.fd_slope > 0.0 && c.hft_value > 0.0;
      w.update(c.abs_diff, at(lambda, g, nu % 2, nu));
    }
  auto o = within(w, 1e-5);
  o.passed = o.passed && positive;
  if (!positive) o.detail += " (non-positive slope)";
  return o;
}

Outcome hft_g() {
  const auto c = hft_g_check(-6.0, 1.0, Parity::even, 0, 1e-3);
  char buf[96];
  std::snprintf(buf, sizeof buf, "fd=%.10g hft=%.10g", c.fd_slope, c.hft_value);
  return {c.abs_diff <= 1e-3, c.abs_diff, 1e-3, buf};
}

Outcome residuals() {
  Worst exact;
  double weakest_relative = INFINITY;  // every perturbed state must fail the 1e-10 check
  double weakest_absolute = INFINITY;
  for (int n = 0; n <= 6; ++n)
    for (Parity s : kParities)
      for (double g : kCouplings)
        for (const auto& st : exact_states(n, s, g)) {
          exact.update(residual_check(st).relative(), at(st.lambda, g, index_of(s), st.nu));
          const auto perturbed = residual_check(make_state(n, st.i, s, g, st.lambda + 1e-2));
          weakest_relative = std::min(weakest_relative, perturbed.relative());
          weakest_absolute = std::min(weakest_absolute, perturbed.max_abs);
        }
  // The control proper: n = 1, i = 1, g = 1, s = 0 at lambda = -6.01.
  const double control = residual_check(make_state(1, 1, Parity::even, 1.0, -6.01)).max_abs;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "worst at %s; control %.3e (must exceed 1e-3); all perturbed states: relative >= %.3e, absolute >= %.3e",
                exact.where.c_str(), control, weakest_relative, weakest_absolute);
  return {exact.value <= 1e-10 && control > 1e-3 && weakest_relative > 1e-10, exact.value, 1e-10, buf};
}

Outcome variational() {
  Worst w;
  std::vector<double> previous;
  for (int n : {6, 10, 14, 18, 22}) {
    const auto e = rr_spectrum(-6.0, 1.0, Parity::even, n, 3);
    if (!previous.empty())
      for (int k = 0; k < 3; ++k) w.update(std::max(0.0, e[k] - previous[k]), "N=" + std::to_string(n) + " k=" + std::to_string(k));
    previous = e;
  }
  return within(w, 1e-12);
}

Outcome figures() {
  // Determinism: everything is computed twice from scratch.
  bool deterministic = true;
  Worst join;
  for (auto cfg : {ScanConfig::even_defaults(), ScanConfig::odd_defaults()}) {
    const auto a = compute_spectrum_figure(cfg);
    const auto b = compute_spectrum_figure(cfg);
    deterministic = deterministic && curves_csv(a) == curves_csv(b) && points_csv(a) == points_csv(b);
    for (const auto& row : join_points_with_curves(a))
      join.update(row.deviation(), at(row.lambda, cfg.g, index_of(cfg.s), row.nu));
  }
  const double gs[] = {0.2, 0.5, 1.0};
  const auto f3 = compute_figure3(gs, 6);
  deterministic = deterministic && figure3_csv(f3) == figure3_csv(compute_figure3(gs, 6));

  bool rows_ok = true;
  for (const auto& [g, lambda, energy] : {std::tuple{1.0, -6.0, -1.0}, std::tuple{0.5, -2.5, 0.0}}) {
    const auto it = std::find_if(f3.begin(), f3.end(), [&](const Figure3Row& r) { return r.g == g && r.n == 1; });
    rows_ok = rows_ok && it != f3.end() && std::abs(it->lambda - lambda) <= 1e-12 && std::abs(it->energy - energy) <= 1e-12;
  }
  const std::string csv = figure3_csv(f3);
  rows_ok = rows_ok && csv.find("1,1,-6,-1\n") != std::string::npos && csv.find("0.5,1,-2.5,0\n") != std::string::npos;

  std::string detail = "join worst at " + join.where;
  if (!deterministic) detail += "; CSV output not deterministic";
  if (!rows_ok) detail += "; figure3 rows wrong";
  return {deterministic && rows_ok && join.value <= 1e-3, join.value, 1e-3, detail};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"closed-form roots n=1", closed_form_n1},
      {"closed-form roots n=2", closed_form_n2},
      {"node law n<=6", node_law},
      {"RR (N=22) through exact points, g=1", rr_through_exact_points},
      {"span exactness at lambda^(1,1)", span_exactness},
      {"grid oracle vs RR and harmonic levels", oracle_agreement},
      {"Hellmann-Feynman in lambda", hft_lambda},
      {"Hellmann-Feynman in g", hft_g},
      {"residuals and perturbed control", residuals},
      {"variational monotonicity in N", variational},
      {"figure CSVs, join and figure3 rows", figures},
  };

  int failures = 0, index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::numeric_limits<double>::infinity(), 0.0, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s %2d %-40s value=%.3e tol=%.0e  %s\n", o.passed ? "PASS" : "FAIL", index, name, o.value,
                o.tolerance, o.detail.c_str());
    std::fflush(stdout);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %d criteria passed in %.1f s\n", index - failures, index, seconds);
  return failures == 0 ? 0 : 1;
}
