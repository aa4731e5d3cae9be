#include "thermaldose/activation_flight.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"
#include "thermaldose/quadrature.hpp"
#include "thermaldose/root_finding.hpp"

namespace thermaldose {
namespace {

constexpr double kDepthTol = 1e-10;
constexpr double kVolumeRelTol = 1e-10;
constexpr double kTimeRelTol = 1e-11;
constexpr double kPowerRelTol = 1e-11;
constexpr double kSearchLimit = 1e12;

// Earliest time the beam-center surface reaches T_act: P h(t) = 1.
double surface_activation_time(double p_nd) {
  const auto excess = [p_nd](double t) { return p_nd * kernel_h(t) - 1.0; };
  const double hi = grow_until([&](double t) { return excess(t) >= 0.0; }, 1.0, 2.0,
                               kSearchLimit, "surface activation time");
  return solve_bracketed(excess, 0.0, hi, RootTolerance{0.0, 1e-15});
}

}  // namespace

double activated_depth(double p_nd, double t_n) {
  if (t_n <= 0.0 || p_nd * kernel_u(0.0, t_n) <= 1.0) return 0.0;
  const auto excess = [=](double z) { return p_nd * kernel_u(z, t_n) - 1.0; };
  const double hi = grow_until([&](double z) { return excess(z) < 0.0; }, 1.0, 2.0, 1e6,
                               "activated depth");
  return solve_bracketed(excess, 0.0, hi, RootTolerance{kDepthTol, 0.0});
}

double activated_volume_nd(double p_nd, double r_bn, double t_n) {
  const double depth = activated_depth(p_nd, t_n);
  if (depth <= 0.0) return 0.0;
  const double log_p = std::log(p_nd);
  const auto integrand = [=](double z) {
    const double u = kernel_u(z, t_n);
    // the root tolerance can leave the last node marginally past z*
    return u > 0.0 ? std::fmax(log_p + std::log(u), 0.0) : 0.0;
  };
  const double area_integral = integrate_adaptive(integrand, 0.0, depth, kVolumeRelTol).value;
  return 0.5 * std::numbers::pi * r_bn * r_bn * area_integral;
}

double flight_initiation_time(double p_nd, double r_bn) {
  if (!(p_nd > 0.0)) {
    throw NonPositivePower("center power must be positive, got " + std::to_string(p_nd));
  }
  if (!(r_bn > 0.0)) throw ConfigError("beam radius must be positive");
  const auto deficit = [=](double t) {
    return activated_volume_nd(p_nd, r_bn, t) - kVolumeThresholdNd;
  };
  const double t_lo = surface_activation_time(p_nd);
  const double t_hi = grow_until([&](double t) { return deficit(t) >= 0.0; },
                                 2.0 * t_lo, 2.0, kSearchLimit, "flight initiation time");
  return solve_bracketed(deficit, t_lo, t_hi, -kVolumeThresholdNd, deficit(t_hi),
                         RootTolerance{0.0, kTimeRelTol});
}

double invert_power(double t_fn, double r_bn, double t_rn) {
  if (!(t_fn > t_rn)) {
    throw FlightTimeTooSmall("flight action at normalized time " + std::to_string(t_fn) +
                             " does not exceed the reaction time " + std::to_string(t_rn));
  }
  const double t_cn = t_fn - t_rn;
  const auto lag = [=](double p) { return flight_initiation_time(p, r_bn) - t_cn; };

  // At P = 1/h(t_cn) the surface only just touches T_act at t_cn, so the
  // volume there is zero and initiation comes later.
  const double p_lo = 1.0 / kernel_h(t_cn);
  double lag_hi = 0.0;
  const double p_hi = grow_until(
      [&](double p) {
        lag_hi = lag(p);
        return lag_hi <= 0.0;
      },
      2.0 * p_lo, 2.0, kSearchLimit * p_lo, "center power");
  return solve_bracketed(lag, p_lo, p_hi, lag(p_lo), lag_hi, RootTolerance{0.0, kPowerRelTol});
}

FlightSolution solve_flight(const BeamSpec& beam, const NormalizationScales& scales) {
  FlightSolution sol;
  if (const auto* power = std::get_if<CenterPowerNd>(&beam.power)) {
    sol.p_nd = power->value;
    sol.t_cn = flight_initiation_time(sol.p_nd, beam.r_bn);
    sol.t_fn = sol.t_cn + scales.t_Rn;
  } else {
    const double t_f = std::get<FlightActionSeconds>(beam.power).value;
    sol.t_fn = scales.to_normalized_time(t_f);
    sol.p_nd = invert_power(sol.t_fn, beam.r_bn, scales.t_Rn);
    sol.t_cn = sol.t_fn - scales.t_Rn;
  }
  return sol;
}

}  // namespace thermaldose
