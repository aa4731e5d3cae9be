#pragma once

#include <variant>

#include "thermaldose/parameters.hpp"

namespace thermaldose {

/// Nondimensional beam-center power P_d^(0) / P_s.
struct CenterPowerNd {
  double value = 0.0;
};

/// Observed flight-action time, seconds.
struct FlightActionSeconds {
  double value = 0.0;
};

/// Gaussian beam in normalized units: radius as a multiple of r_s, and either
/// the center power or the flight-action time that determines it.
struct BeamSpec {
  double r_bn = 1.0;
  std::variant<CenterPowerNd, FlightActionSeconds> power;
};

struct FlightSolution {
  double t_cn = 0.0;  ///< normalized flight-initiation time
  double t_fn = 0.0;  ///< normalized flight-action time, t_cn + t_Rn
  double p_nd = 0.0;
};

/// Depth z* where P U(z*, t) = 1; 0 when the surface has not reached T_act.
double activated_depth(double p_nd, double t_n);

/// Normalized volume with T_nd >= 1 under a Gaussian beam. The lateral profile
/// integrates in closed form, leaving pi r_bn^2 / 2 * int_0^{z*} ln(P U(z,t)) dz.
double activated_volume_nd(double p_nd, double r_bn, double t_n);

/// Normalized time at which the activated volume reaches pi.
/// Throws NonPositivePower for p_nd <= 0.
double flight_initiation_time(double p_nd, double r_bn);

/// Center power whose flight-initiation time is t_fn - t_rn.
/// Throws FlightTimeTooSmall when t_fn <= t_rn.
double invert_power(double t_fn, double r_bn, double t_rn);

/// Resolves either form of BeamSpec to the complete flight timeline.
FlightSolution solve_flight(const BeamSpec& beam, const NormalizationScales& scales);

}  // namespace thermaldose
