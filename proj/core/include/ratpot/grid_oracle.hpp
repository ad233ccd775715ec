#pragma once

#include <vector>

#include "ratpot/model.hpp"

namespace ratpot {

inline constexpr double kDefaultGridHalfWidth = 12.0;
inline constexpr int kDefaultGridPoints = 32000;

/// Uniform interior grid on (-half_width, half_width) with Dirichlet walls;
/// spacing 2 half_width / (points + 1). params.s is ignored: both parities
/// live on the full line.
struct GridSpec {
  double half_width = kDefaultGridHalfWidth;
  int points = kDefaultGridPoints;
  ModelParams params;

  double spacing() const noexcept { return 2.0 * half_width / (points + 1); }
};

struct GridLevel {
  double energy = 0.0;
  Parity parity = Parity::even;  // read off the eigenvector
};

/// Lowest `count` eigenvalues of the second-order central-difference
/// Hamiltonian, located by Sturm-count bisection; parity from an inverse
/// iteration eigenvector. Throws InvalidParameter for count >= points and
/// SolverFailure if the eigenvalues come out decreasing.
std::vector<GridLevel> grid_spectrum(const GridSpec& spec, int count);

/// Energies only.
std::vector<double> grid_energies(const GridSpec& spec, int count);

/// Number of eigenvalues of the grid Hamiltonian strictly below `shift`.
int grid_sturm_count(const GridSpec& spec, double shift);

}  // namespace ratpot
