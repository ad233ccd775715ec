#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ratpot/errors.hpp"
#include "ratpot/figures.hpp"

using namespace ratpot;

namespace {

ScanConfig small_scan(Parity s) {
  ScanConfig cfg = s == Parity::even ? ScanConfig::even_defaults() : ScanConfig::odd_defaults();
  cfg.lambda_min = -10.0;
  cfg.lambda_max = 0.0;
  cfg.lambda_steps = 41;
  cfg.nu_max = 4 + index_of(s);
  cfg.n_max = 3;
  return cfg;
}

}  // namespace

TEST_CASE("exact table rows") {
  const auto rows = cmd_exact(2, Parity::even, 1.0);
  REQUIRE(rows.size() == 1 + 2 + 3);
  CHECK(rows[0].n == 0);
  CHECK(rows[0].lambda == 0.0);
  CHECK(rows[0].energy == doctest::Approx(1.0));
  CHECK(rows[1].lambda == doctest::Approx(-6.0).epsilon(1e-13));
  CHECK(rows[1].energy == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(rows[1].nu == 0);
  CHECK(rows[3].n == 2);
  CHECK(rows[3].lambda == doctest::Approx(-(13.0 + std::sqrt(17.0))).epsilon(1e-13));
  for (std::size_t k = 1; k < rows.size(); ++k)
    CHECK((rows[k].n > rows[k - 1].n || (rows[k].n == rows[k - 1].n && rows[k].i > rows[k - 1].i)));

  const std::string csv = exact_csv(rows);
  CHECK(csv.rfind("n,i,s,g,lambda,E,nu\n", 0) == 0);
  CHECK(csv.find("1,1,0,1,-6,-1,0\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK_THROWS_AS(cmd_exact(-1, Parity::even, 1.0), InvalidParameter);
  CHECK_THROWS_AS(cmd_exact(2, Parity::even, 0.0), InvalidParameter);
}

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-6.0) == "-6");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(std::sqrt(17.0) - 13.0) == "-8.87689437438234");
}

TEST_CASE("lowest-root energies versus coupling") {
  const double gs[] = {1.0, 0.5};
  const auto rows = compute_figure3(gs, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].lambda == 0.0);
  CHECK(rows[0].energy == doctest::Approx(1.0));
  CHECK(rows[1].lambda == doctest::Approx(-6.0).epsilon(1e-13));
  CHECK(rows[1].energy == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(rows[3].lambda == doctest::Approx(-2.5).epsilon(1e-13));
  CHECK(std::abs(rows[3].energy) <= 1e-12);

  const std::string csv = figure3_csv(rows);
  CHECK(csv.rfind("g,n,lambda,E\n", 0) == 0);
  CHECK(csv.find("1,1,-6,-1\n") != std::string::npos);
  CHECK(csv.find("0.5,1,-2.5,0\n") != std::string::npos);

  const double bad[] = {-1.0};
  CHECK_THROWS_AS(compute_figure3(bad, 2), InvalidParameter);
}

TEST_CASE("cubic interpolation reproduces cubics") {
  std::vector<double> xs, ys;
  auto cubic = [](double x) { return 2.0 - x + 0.5 * x * x - 0.25 * x * x * x; };
  for (int k = 0; k <= 10; ++k) {
    xs.push_back(-3.0 + 0.6 * k);
    ys.push_back(cubic(xs.back()));
  }
  for (double x : {-3.0, -2.71, 0.0, 0.13, 2.99, 3.0}) CHECK(interpolate_cubic(xs, ys, x) == doctest::Approx(cubic(x)).epsilon(1e-13));
  const double two[] = {0.0, 1.0};
  const double vals[] = {1.0, 3.0};
  CHECK(interpolate_cubic(two, vals, 0.25) == doctest::Approx(1.5));
}

TEST_CASE("scan configuration") {
  const auto even = ScanConfig::even_defaults();
  CHECK(even.curve_nus() == std::vector<int>{0, 2, 4, 6, 8});
  CHECK(ScanConfig::odd_defaults().curve_nus() == std::vector<int>{1, 3, 5, 7, 9});
  const auto grid = even.lambda_grid();
  CHECK(grid.size() == 201);
  CHECK(grid.front() == -40.0);
  CHECK(grid.back() == 0.0);
  CHECK(grid[100] == doctest::Approx(-20.0));

  ScanConfig bad = even;
  bad.lambda_min = 1.0;
  CHECK_THROWS_AS(validate(bad), InvalidParameter);
  bad = even;
  bad.lambda_steps = 1;
  CHECK_THROWS_AS(validate(bad), InvalidParameter);
  bad = even;
  bad.basis_size = 3;
  CHECK_THROWS_AS(validate(bad), InvalidParameter);
  bad = even;
  bad.g = std::nan("");
  CHECK_THROWS_AS(validate(bad), InvalidParameter);
}

TEST_CASE("spectrum figure: curves, points and join") {
  const auto fig = compute_spectrum_figure(small_scan(Parity::even));
  REQUIRE(fig.curves.size() == 41);
  CHECK(fig.nus == std::vector<int>{0, 2, 4});
  CHECK(fig.curves.back()[0] == doctest::Approx(1.0).epsilon(1e-4));
  for (const auto& row : fig.curves)
    for (std::size_t c = 1; c < row.size(); ++c) CHECK(row[c] > row[c - 1]);

  bool has_ground = false;
  for (const auto& st : fig.points) {
    CHECK(st.lambda >= -10.0);
    CHECK(st.nu <= 4);
    if (std::abs(st.lambda + 6.0) < 1e-12 && st.nu == 0) has_ground = std::abs(st.energy + 1.0) < 1e-12;
  }
  CHECK(has_ground);
  CHECK(points_csv(fig).find("1,1,0,1,-6,-1,0\n") != std::string::npos);

  // Away from lambda = 0 the basis represents exact states to roundoff;
  // at the harmonic end the join is limited by basis convergence.
  for (const auto& row : join_points_with_curves(fig)) {
    INFO("n=" << row.n << " i=" << row.i << " nu=" << row.nu);
    CHECK(row.deviation() <= 2e-3);
    if (row.lambda < -1.0) CHECK(row.deviation() <= 1e-3);
  }

  const std::string csv = curves_csv(fig);
  CHECK(csv.rfind("lambda,E_0,E_2,E_4\n", 0) == 0);
  CHECK(csv == curves_csv(compute_spectrum_figure(small_scan(Parity::even))));
}

TEST_CASE("odd figure header") {
  auto cfg = small_scan(Parity::odd);
  cfg.lambda_steps = 5;
  const auto fig = compute_spectrum_figure(cfg);
  CHECK(curves_csv(fig).rfind("lambda,E_1,E_3,E_5\n", 0) == 0);
  CHECK(points_csv(fig).rfind("n,i,s,g,lambda,E,nu\n", 0) == 0);
}

TEST_CASE("file output is byte exact") {
  const auto dir = std::filesystem::temp_directory_path() / "ratpot_test_figures";
  std::filesystem::remove_all(dir);
  const std::string text = "a,b\n1,2\n";
  write_text_file(dir / "sub" / "x.csv", text);
  std::ifstream in(dir / "sub" / "x.csv", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
  std::filesystem::remove_all(dir);
}
