#include "ratpot/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratpot/errors.hpp"

namespace ratpot {

ScanConfig ScanConfig::even_defaults() { return ScanConfig{}; }

ScanConfig ScanConfig::odd_defaults() {
  ScanConfig cfg;
  cfg.s = Parity::odd;
  cfg.nu_max = 9;
  return cfg;
}

std::vector<double> ScanConfig::lambda_grid() const {
  std::vector<double> grid(lambda_steps);
  const double step = (lambda_max - lambda_min) / (lambda_steps - 1);
  for (int k = 0; k < lambda_steps; ++k) grid[k] = lambda_min + k * step;
  grid.back() = lambda_max;
  return grid;
}

std::vector<int> ScanConfig::curve_nus() const {
  std::vector<int> nus;
  for (int nu = index_of(s); nu <= nu_max; nu += 2) nus.push_back(nu);
  return nus;
}

void validate(const ScanConfig& cfg) {
  validate_coupling(cfg.g);
  if (!std::isfinite(cfg.lambda_min) || !std::isfinite(cfg.lambda_max) || !(cfg.lambda_min < cfg.lambda_max))
    throw InvalidParameter("scan needs finite lambda_min < lambda_max");
  if (cfg.lambda_steps < 2) throw InvalidParameter("scan needs at least 2 lambda steps");
  if (cfg.nu_max < index_of(cfg.s)) throw InvalidParameter("nu_max below the lowest node count of the sector");
  if (cfg.n_max < 0) throw InvalidParameter("n_max must be >= 0");
  const int curves = static_cast<int>(cfg.curve_nus().size());
  if (cfg.basis_size < curves) throw InvalidParameter("basis size smaller than the number of curves");
}

std::vector<ExactState> cmd_exact(int n_max, Parity s, double g) {
  if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
  std::vector<ExactState> rows;
  for (int n = 0; n <= n_max; ++n) {
    auto states = exact_states(n, s, g);
    rows.insert(rows.end(), std::make_move_iterator(states.begin()), std::make_move_iterator(states.end()));
  }
  return rows;
}

SpectrumFigure compute_spectrum_figure(const ScanConfig& cfg) {
  validate(cfg);
  SpectrumFigure fig;
  fig.config = cfg;
  fig.nus = cfg.curve_nus();
  fig.lambdas = cfg.lambda_grid();
  const int count = static_cast<int>(fig.nus.size());

  fig.curves.reserve(fig.lambdas.size());
  for (double lambda : fig.lambdas) fig.curves.push_back(rr_spectrum(lambda, cfg.g, cfg.s, cfg.basis_size, count));

  for (auto& st : cmd_exact(cfg.n_max, cfg.s, cfg.g)) {
    if (st.nu <= cfg.nu_max && st.lambda >= cfg.lambda_min && st.lambda <= cfg.lambda_max)
      fig.points.push_back(std::move(st));
  }
  return fig;
}

double JoinRow::deviation() const noexcept { return std::abs(curve - exact); }

double interpolate_cubic(std::span<const double> xs, std::span<const double> ys, double x) {
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  if (n < 2 || ys.size() != xs.size()) throw InvalidParameter("interpolate_cubic: need >= 2 matching nodes");
  if (n < 4) {
    // Too few nodes for a cubic; fall back to the linear segment.
    const auto hi = std::clamp<std::ptrdiff_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin(), 1, n - 1);
    const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
  }
  const auto upper = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  const auto first = std::clamp<std::ptrdiff_t>(upper - 2, 0, n - 4);
  double value = 0.0;
  for (std::ptrdiff_t a = first; a < first + 4; ++a) {
    double basis = 1.0;
    for (std::ptrdiff_t b = first; b < first + 4; ++b)
      if (b != a) basis *= (x - xs[b]) / (xs[a] - xs[b]);
    value += basis * ys[a];
  }
  return value;
}

std::vector<JoinRow> join_points_with_curves(const SpectrumFigure& fig) {
  std::vector<JoinRow> rows;
  std::vector<double> column(fig.lambdas.size());
  for (const auto& st : fig.points) {
    const auto it = std::find(fig.nus.begin(), fig.nus.end(), st.nu);
    if (it == fig.nus.end()) continue;
    const auto c = it - fig.nus.begin();
    for (std::size_t r = 0; r < fig.lambdas.size(); ++r) column[r] = fig.curves[r][c];
    JoinRow row;
    row.n = st.n;
    row.i = st.i;
    row.nu = st.nu;
    row.lambda = st.lambda;
    row.exact = st.energy;
    row.curve = interpolate_cubic(fig.lambdas, column, st.lambda);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Figure3Row> compute_figure3(std::span<const double> g_list, int n_max) {
  if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
  std::vector<Figure3Row> rows;
  for (double g : g_list) {
    validate_coupling(g);
    for (int n = 0; n <= n_max; ++n) {
      const double lambda = quantization_roots(n, Parity::even, g).front();
      rows.push_back({g, n, lambda, termination_energy(n, Parity::even, g, lambda)});
    }
  }
  return rows;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // folds -0 into +0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string exact_csv(std::span<const ExactState> states) {
  std::string out = "n,i,s,g,lambda,E,nu\n";
  for (const auto& st : states) {
    out += std::to_string(st.n) + ',' + std::to_string(st.i) + ',' + std::to_string(index_of(st.s)) + ',' +
           format_number(st.g) + ',' + format_number(st.lambda) + ',' + format_number(st.energy) + ',' +
           std::to_string(st.nu) + '\n';
  }
  return out;
}

std::string curves_csv(const SpectrumFigure& fig) {
  std::string out = "lambda";
  for (int nu : fig.nus) out += ",E_" + std::to_string(nu);
  out += '\n';
  for (std::size_t r = 0; r < fig.lambdas.size(); ++r) {
    out += format_number(fig.lambdas[r]);
    for (double e : fig.curves[r]) out += ',' + format_number(e);
    out += '\n';
  }
  return out;
}

std::string points_csv(const SpectrumFigure& fig) { return exact_csv(fig.points); }

std::string figure3_csv(std::span<const Figure3Row> rows) {
  std::string out = "g,n,lambda,E\n";
  for (const auto& r : rows)
    out += format_number(r.g) + ',' + std::to_string(r.n) + ',' + format_number(r.lambda) + ',' +
           format_number(r.energy) + '\n';
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace ratpot
