#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace thermaldose {

/// Finite-difference solve of U_t = U_zz + exp(-z) 1{t < t_off} on [0, L],
/// zero flux at z = 0 and U = 0 at z = L.
struct FdConfig {
  double depth_L = 30.0;
  int nz = 3001;
  double dt = 5e-3;
  double t_end = 5.0;
  std::optional<double> t_off;  ///< power-off time; must fall on a step
  int sample_every = 10;        ///< store every n-th step
};

struct FdField {
  std::vector<double> z;
  std::vector<double> times;
  std::vector<double> values;  ///< row-major, times.size() x z.size()

  double at(std::size_t ti, std::size_t zi) const { return values[ti * z.size() + zi]; }
  double dz() const { return z[1] - z[0]; }
};

/// Crank-Nicolson with ghost-node reflection at the surface. The first step and
/// the step after power-off are each taken as two backward-Euler half steps,
/// which damps the stiff modes excited by the switched source.
/// Throws UnstableConfig for unusable configurations.
FdField solve_fd(const FdConfig& config);

struct FdErrorReport {
  double max_abs_error = 0.0;
  double z_at_max = 0.0;
  double t_at_max = 0.0;
};

/// max |U_fd - U| over stored samples with z <= z_max, against the closed form
/// (with power-off superposition when t_off is set).
FdErrorReport compare_with_closed_form(const FdConfig& config, double z_max = 10.0);

inline double max_error_vs_closed_form(const FdConfig& config) {
  return compare_with_closed_form(config).max_abs_error;
}

}  // namespace thermaldose
