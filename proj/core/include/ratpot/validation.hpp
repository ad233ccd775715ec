#pragma once

#include <string>
#include <vector>

namespace ratpot {

struct CheckResult {
  std::string name;
  double value = 0.0;      // worst observed quantity
  double tolerance = 0.0;  // pass when value <= tolerance
  bool passed = false;
  std::string detail;

  double margin() const noexcept { return tolerance - value; }
};

struct ValidationOptions {
  bool quick = false;
  /// Shifts every exact lambda before the residual check; any nonzero value
  /// should make that check fail.
  double lambda_perturbation = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const noexcept;
};

/// Node law, termination, residuals, RR exactness and upper bounds, grid
/// agreement, parity alternation, variational monotonicity and both
/// Hellmann-Feynman identities.
ValidationReport run_validation(const ValidationOptions& options);

std::string format_report(const ValidationReport& report);

}  // namespace ratpot
