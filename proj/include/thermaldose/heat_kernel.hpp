#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thermaldose/parameters.hpp"

namespace thermaldose {

/// A point of the normalized depth/time plane (depth in units of 1/mu, time in
/// units of t_s).
struct KernelPoint {
  double z_n = 0.0;
  double t_n = 0.0;
};

/// Solution of U_t = U_zz + exp(-z) on z >= 0 with U_z(0,t) = 0 and U(z,0) = 0.
/// Zero for t <= 0. Evaluated in an erfcx form that stays finite for all t.
double kernel_u(double z_n, double t_n);
inline double kernel_u(KernelPoint p) { return kernel_u(p.z_n, p.t_n); }

/// Surface value h(s) = U(0, s) = 2 sqrt(s/pi) - 1 + erfcx(sqrt(s)); 0 for s <= 0.
double kernel_h(double s);

/// Beam-center surface elevation P (h(t) - h(t - t_F)) with power removed at t_F.
double surface_trace(double p_nd, double t_fn, double t_n);

/// Nondimensional elevation anywhere in the tissue. With t_fn unset the beam
/// stays on.
double temp_field_nd(double p_nd, double r_bn, double r_n, double z_n, double t_n,
                     std::optional<double> t_fn = std::nullopt);

/// T_base + (T_act - T_base) * T_nd, in degC.
double to_physical(double t_nd, const SkinExposureParams& params);

/// Sampled beam-center surface trace.
struct TempTraceNd {
  std::vector<double> t_n;
  std::vector<double> t_nd;
};

/// Samples surface_trace on caller-supplied, strictly increasing times.
TempTraceNd sample_surface_trace(double p_nd, double t_fn, std::span<const double> times);

}  // namespace thermaldose
