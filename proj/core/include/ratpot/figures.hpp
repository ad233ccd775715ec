#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ratpot/exact_spectrum.hpp"
#include "ratpot/model.hpp"
#include "ratpot/rayleigh_ritz.hpp"
#include "ratpot/recurrence.hpp"

namespace ratpot {

/// Parameters of an eigenvalue-versus-lambda scan.
struct ScanConfig {
  double g = 1.0;
  Parity s = Parity::even;
  double lambda_min = -40.0;
  double lambda_max = 0.0;
  int lambda_steps = 201;
  int basis_size = kDefaultBasisSize;
  int nu_max = 8;
  int n_max = 8;

  /// Even states, nu = 0, 2, ..., 8.
  static ScanConfig even_defaults();
  /// Odd states, nu = 1, 3, ..., 9.
  static ScanConfig odd_defaults();

  std::vector<double> lambda_grid() const;
  /// Node counts of the plotted curves, nu = s, s+2, ..., <= nu_max.
  std::vector<int> curve_nus() const;
};

void validate(const ScanConfig& cfg);

/// Exact states of sectors n = 0..n_max, sorted by (n, i).
std::vector<ExactState> cmd_exact(int n_max, Parity s, double g);

struct SpectrumFigure {
  ScanConfig config;
  std::vector<int> nus;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> curves;  // curves[row][column], column per nu
  std::vector<ExactState> points;           // lambda in range, nu <= nu_max
};

/// RR curves on the lambda grid plus the exact points that fall on them.
SpectrumFigure compute_spectrum_figure(const ScanConfig& cfg);

struct JoinRow {
  int n = 0;
  int i = 0;
  int nu = 0;
  double lambda = 0.0;
  double exact = 0.0;
  double curve = 0.0;  // cubic interpolation of the nu curve at lambda
  double deviation() const noexcept;
};

/// Interpolated curve value at every exact point of the figure.
std::vector<JoinRow> join_points_with_curves(const SpectrumFigure& fig);

/// Cubic Lagrange interpolation through the four grid nodes nearest x.
double interpolate_cubic(std::span<const double> xs, std::span<const double> ys, double x);

struct Figure3Row {
  double g = 0.0;
  int n = 0;
  double lambda = 0.0;
  double energy = 0.0;
};

/// E_0^(n,1)(g): lowest-root exact energies of the even sector.
std::vector<Figure3Row> compute_figure3(std::span<const double> g_list, int n_max);

/// 15 significant digits, no negative zero.
std::string format_number(double v);

std::string exact_csv(std::span<const ExactState> states);
std::string curves_csv(const SpectrumFigure& fig);
std::string points_csv(const SpectrumFigure& fig);
std::string figure3_csv(std::span<const Figure3Row> rows);

/// Writes `content` byte for byte; throws Error on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ratpot
