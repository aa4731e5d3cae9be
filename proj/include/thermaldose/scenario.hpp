#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thermaldose/activation_flight.hpp"
#include "thermaldose/damage_model.hpp"
#include "thermaldose/parameters.hpp"

namespace thermaldose {

/// Everything an exposure test reports, in physical units.
struct ExposureOutcome {
  double t_F = 0.0;    ///< flight action, s
  double t_c = 0.0;    ///< flight initiation, s
  double r_bn = 0.0;   ///< beam radius / r_s
  double P_d0 = 0.0;   ///< absorbed center power density, W/cm^2
  double T_max = 0.0;  ///< peak surface temperature, degC
  double Omega = 0.0;
  BurnClass burn = BurnClass::None;
  double t_stl = 0.0;  ///< settlement time, s
  FlightSolution flight;
  NormalizationScales scales;
};

/// Full pipeline for one observed flight-action time t_F (s) and beam radius
/// r_b = r_b_multiple * r_s. Throws FlightTimeTooSmall when t_F <= t_R.
ExposureOutcome run_exposure(double t_F, double r_b_multiple, const SkinExposureParams& params,
                             const DamageOptions& options = {});

struct CurvePoint {
  double t_F = 0.0;
  std::optional<ExposureOutcome> outcome;
  std::string error;  ///< set when outcome is empty
};

/// run_exposure at each t_F; failures are recorded per point. Points are
/// evaluated concurrently and returned in input order.
std::vector<CurvePoint> omega_curve(double r_b_multiple, std::span<const double> t_F_values,
                                    const SkinExposureParams& params,
                                    const DamageOptions& options = {});

/// n log-spaced points per decade covering [lo, hi], both ends included.
std::vector<double> log_spaced(double lo, double hi, int per_decade);

enum class SweepParameter { t_R, T_base, T_act, k, rhoCp, mu_inv, v_c_ratio };

SweepParameter parse_sweep_parameter(std::string_view name);
std::string_view to_string(SweepParameter p);

/// One member of a one-at-a-time sensitivity family.
struct SensitivityMember {
  double value = 0.0;
  SkinExposureParams params;
  NormalizationScales scales;
  double r_bn = 0.0;  ///< normalized radius actually simulated
  std::vector<CurvePoint> curve;
};

struct SensitivityFamily {
  SweepParameter parameter = SweepParameter::t_R;
  double r_b_anchor = 1.0;
  std::vector<SensitivityMember> members;
};

/// Parameter set and normalized radius for one sweep value. For mu_inv and
/// v_c_ratio the physical beam radius is held at r_b_anchor times the reference
/// lateral scale of `reference`, so r_bn moves with the perturbed r_s.
std::pair<SkinExposureParams, double> apply_sweep_value(SweepParameter p, double value,
                                                        double r_b_anchor,
                                                        const SkinExposureParams& reference);

SensitivityFamily sensitivity_sweep(SweepParameter p, std::span<const double> values,
                                    double r_b_anchor, std::span<const double> t_F_values,
                                    const SkinExposureParams& reference,
                                    const DamageOptions& options = {});

/// Flight-action times (s) at which Omega falls through the first-degree and
/// second-degree thresholds. Omega decreases in t_F, so first >= second.
struct TransitionWindow {
  double t_F_first_degree = 0.0;   ///< Omega = 0.53
  double t_F_second_degree = 0.0;  ///< Omega = 1
};

/// Throws NoBracket if a threshold is not crossed on (t_R + 1 ms, 1e4 s].
TransitionWindow transition_window(double r_bn, const SkinExposureParams& params,
                                   const DamageOptions& options = {});

/// t_F (s) at which Omega(t_F) = target, to 1e-4 s.
double flight_time_for_omega(double target, double r_bn, const SkinExposureParams& params,
                             const DamageOptions& options = {});

}  // namespace thermaldose
