// Command-line front end: exact tables, figure data and the validation suite.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ratpot/errors.hpp"
#include "ratpot/figures.hpp"
#include "ratpot/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  double g = 1.0;
  std::vector<double> g_list{0.2, 0.5, 1.0};
  int s = 0;
  std::optional<int> n_max;  // unset: command default
  int basis_size = ratpot::kDefaultBasisSize;
  double lambda_min = -40.0;
  double lambda_max = 0.0;
  int lambda_steps = 201;
  std::optional<int> nu_max;
  std::string out;
  bool quick = false;
  bool steps_given = false;
  double perturb_lambda = 0.0;
};

void add_scan_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--g", o.g, "Coupling g > 0")->capture_default_str();
  cmd->add_option("--n-max", o.n_max, "Largest polynomial degree n of exact points");
  cmd->add_option("--basis-size", o.basis_size, "Rayleigh-Ritz basis size N")->capture_default_str();
  cmd->add_option("--lambda-min", o.lambda_min, "Scan start")->capture_default_str();
  cmd->add_option("--lambda-max", o.lambda_max, "Scan end")->capture_default_str();
  cmd->add_option("--lambda-steps", o.lambda_steps, "Number of scan points")->capture_default_str();
  cmd->add_flag("--quick", o.quick, "Coarse scan of 41 points unless --lambda-steps is given");
  cmd->add_option("--nu-max", o.nu_max, "Largest node count plotted");
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    ratpot::write_text_file(path, content);
}

int run_spectrum_figure(const Options& o, ratpot::Parity s, const std::string& stem) {
  ratpot::ScanConfig cfg = s == ratpot::Parity::even ? ratpot::ScanConfig::even_defaults()
                                                      : ratpot::ScanConfig::odd_defaults();
  cfg.g = o.g;
  cfg.lambda_min = o.lambda_min;
  cfg.lambda_max = o.lambda_max;
  cfg.lambda_steps = o.quick && !o.steps_given ? 41 : o.lambda_steps;
  cfg.basis_size = o.basis_size;
  if (o.nu_max) cfg.nu_max = *o.nu_max;
  if (o.n_max) cfg.n_max = *o.n_max;

  const auto fig = ratpot::compute_spectrum_figure(cfg);
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  const auto curves = dir / (stem + "_curves.csv");
  const auto points = dir / (stem + "_points.csv");
  ratpot::write_text_file(curves, ratpot::curves_csv(fig));
  ratpot::write_text_file(points, ratpot::points_csv(fig));

  double worst = 0.0;
  for (const auto& row : ratpot::join_points_with_curves(fig)) worst = std::max(worst, row.deviation());
  std::printf("wrote %s (%zu rows) and %s (%zu points); max |curve - exact| = %.3e\n", curves.c_str(),
              fig.lambdas.size(), points.c_str(), fig.points.size(), worst);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Rayleigh-Ritz spectra of -d2/dx2 + x^2 + lambda x^2/(1+g x^2)"};
  app.require_subcommand(1);
  Options o;

  auto* exact = app.add_subcommand("exact", "Exact states (n, i, lambda, E, nu) for n = 0..n-max");
  exact->add_option("--g", o.g, "Coupling g > 0")->capture_default_str();
  exact->add_option("--s", o.s, "Parity index 0 or 1")->check(CLI::Range(0, 1))->capture_default_str();
  exact->add_option("--n-max", o.n_max, "Largest polynomial degree n (default 4)");
  exact->add_option("--out", o.out, "CSV file (default: stdout)");

  auto* fig1 = app.add_subcommand("figure1", "Even-parity RR curves and exact points");
  add_scan_flags(fig1, o);
  auto* fig2 = app.add_subcommand("figure2", "Odd-parity RR curves and exact points");
  add_scan_flags(fig2, o);

  auto* fig3 = app.add_subcommand("figure3", "Lowest-root exact energies E_0^(n,1) versus g");
  fig3->add_option("--g", o.g_list, "Coupling values")->capture_default_str();
  fig3->add_option("--n-max", o.n_max, "Largest polynomial degree n (default 6)");
  fig3->add_option("--out", o.out, "Output directory")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Run the invariant suite");
  validate->add_flag("--quick", o.quick, "Reduced parameter grid");
  validate->add_option("--perturb-lambda", o.perturb_lambda, "Shift exact lambdas before the residual check");

  try {
    app.parse(argc, argv);
    for (auto* cmd : {fig1, fig2}) o.steps_given = o.steps_given || cmd->count("--lambda-steps") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*exact) {
      const auto states = ratpot::cmd_exact(o.n_max.value_or(4), ratpot::parity_from_index(o.s), o.g);
      write_or_print(o.out, ratpot::exact_csv(states));
      return kExitOk;
    }
    if (*fig1) return run_spectrum_figure(o, ratpot::Parity::even, "figure1");
    if (*fig2) return run_spectrum_figure(o, ratpot::Parity::odd, "figure2");
    if (*fig3) {
      const auto rows = ratpot::compute_figure3(o.g_list, o.n_max.value_or(6));
      const std::filesystem::path dir = o.out.empty() ? "." : o.out;
      ratpot::write_text_file(dir / "figure3.csv", ratpot::figure3_csv(rows));
      std::printf("wrote %s (%zu rows)\n", (dir / "figure3.csv").c_str(), rows.size());
      return kExitOk;
    }
    if (*validate) {
      const auto report = ratpot::run_validation({o.quick, o.perturb_lambda});
      std::cout << ratpot::format_report(report);
      return report.passed() ? kExitOk : kExitFailure;
    }
  } catch (const ratpot::InvalidParameter& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ratpot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
