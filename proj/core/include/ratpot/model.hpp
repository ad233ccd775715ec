#pragma once

namespace ratpot {

/// Parity of a state: even states carry x^0, odd states x^1 in front of the
/// polynomial factor.
enum class Parity : int { even = 0, odd = 1 };

constexpr int index_of(Parity s) noexcept { return static_cast<int>(s); }

/// Throws InvalidParameter unless s is 0 or 1.
Parity parity_from_index(int s);

const char* to_string(Parity s) noexcept;

/// Physical Hamiltonian -hbar^2/(2m) d^2/dx^2 + V1 x^2 + V2 x^2/(x^2 + x0^2).
struct PhysicalParams {
  double mass = 1.0;
  double hbar = 1.0;
  double v1 = 1.0;
  double v2 = 0.0;
  double x0 = 1.0;
};

/// Dimensionless Hamiltonian -d^2/dx^2 + x^2 + lambda x^2/(1 + g x^2).
struct ModelParams {
  double g = 1.0;
  double lambda = 0.0;
  Parity s = Parity::even;
};

/// Result of removing units from a PhysicalParams instance. The parity is not
/// a property of the Hamiltonian, so only g and lambda are returned.
struct Reduction {
  double g = 0.0;
  double lambda = 0.0;
  double length_unit = 0.0;
  double energy_unit = 0.0;
};

void validate(const PhysicalParams& p);
void validate(const ModelParams& p);

/// Throws InvalidParameter unless g is finite and strictly positive.
void validate_coupling(double g);

Reduction reduce_to_dimensionless(const PhysicalParams& p);

/// x^2 + lambda x^2 / (1 + g x^2).
double potential(double x, const ModelParams& p);

}  // namespace ratpot
