#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thermaldose {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationOptions {
  bool quadrature_only = false;
  bool coarse = false;  ///< deliberately under-resolved FD grid
  std::uint64_t seed = 20240611;
};

/// Finite-difference and quadrature cross-checks of the closed-form model.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace thermaldose
