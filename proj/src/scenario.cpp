#include "thermaldose/scenario.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"
#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"
#include "thermaldose/root_finding.hpp"

namespace thermaldose {

ExposureOutcome run_exposure(double t_F, double r_b_multiple, const SkinExposureParams& params,
                             const DamageOptions& options) {
  if (!(r_b_multiple > 0.0)) throw ConfigError("beam radius multiple must be positive");
  const NormalizationScales scales = normalize(params);
  if (!(t_F > params.t_R)) {
    throw FlightTimeTooSmall("flight action time " + std::to_string(t_F) +
                             " s does not exceed the reaction time " +
                             std::to_string(params.t_R) + " s");
  }
  ExposureOutcome out;
  out.scales = scales;
  out.r_bn = r_b_multiple;
  out.flight = solve_flight(BeamSpec{r_b_multiple, FlightActionSeconds{t_F}}, scales);

  const double p_nd = out.flight.p_nd;
  const double t_fn = out.flight.t_fn;
  const DamageIntegral damage = damage_integral(p_nd, t_fn, scales.coeffs, options);

  out.t_F = t_F;
  out.t_c = t_F - params.t_R;
  out.P_d0 = scales.to_w_per_cm2(p_nd);
  // the trace rises until power-off and decays afterwards
  out.T_max = to_physical(surface_trace(p_nd, t_fn, t_fn), params);
  out.Omega = damage.omega;
  out.burn = classify_burn(damage.omega);
  out.t_stl = scales.to_seconds(damage.t_stl_n);
  return out;
}

std::vector<CurvePoint> omega_curve(double r_b_multiple, std::span<const double> t_F_values,
                                    const SkinExposureParams& params,
                                    const DamageOptions& options) {
  return detail::parallel_map<CurvePoint>(t_F_values.size(), [&](std::size_t i) {
    CurvePoint pt;
    pt.t_F = t_F_values[i];
    try {
      pt.outcome = run_exposure(pt.t_F, r_b_multiple, params, options);
    } catch (const ModelError& e) {
      pt.error = e.what();
    }
    return pt;
  });
}

std::vector<double> log_spaced(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade <= 0) {
    throw ConfigError("log range needs 0 < lo < hi and a positive density");
  }
  const double decades = std::log10(hi / lo);
  const int intervals = std::max(1, static_cast<int>(std::ceil(decades * per_decade - 1e-9)));
  std::vector<double> out;
  out.reserve(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    out.push_back(i == intervals ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / intervals));
  }
  return out;
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "t_R") return SweepParameter::t_R;
  if (name == "T_base") return SweepParameter::T_base;
  if (name == "T_act") return SweepParameter::T_act;
  if (name == "k") return SweepParameter::k;
  if (name == "rhoCp") return SweepParameter::rhoCp;
  if (name == "mu_inv") return SweepParameter::mu_inv;
  if (name == "v_c_ratio") return SweepParameter::v_c_ratio;
  throw UnknownParameter("unknown sweep parameter '" + std::string(name) +
                         "' (t_R, T_base, T_act, k, rhoCp, mu_inv, v_c_ratio)");
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::t_R: return "t_R";
    case SweepParameter::T_base: return "T_base";
    case SweepParameter::T_act: return "T_act";
    case SweepParameter::k: return "k";
    case SweepParameter::rhoCp: return "rhoCp";
    case SweepParameter::mu_inv: return "mu_inv";
    case SweepParameter::v_c_ratio: return "v_c_ratio";
  }
  return "unknown";
}

std::pair<SkinExposureParams, double> apply_sweep_value(SweepParameter p, double value,
                                                        double r_b_anchor,
                                                        const SkinExposureParams& reference) {
  SkinExposureParams params = reference;
  double r_bn = r_b_anchor;
  switch (p) {
    case SweepParameter::t_R: params.t_R = value; break;
    case SweepParameter::T_base: params.T_base = value; break;
    case SweepParameter::T_act: params.T_act = value; break;
    case SweepParameter::k: params.k = value; break;
    // rho and C_p enter only through their product
    case SweepParameter::rhoCp: params.C_p = value / params.rho_m; break;
    case SweepParameter::mu_inv:
      params.mu_inv = value;
      // r_s ~ sqrt(mu): r_bn = anchor * sqrt(mu_ref / mu)
      r_bn = r_b_anchor * std::sqrt(value / reference.mu_inv);
      break;
    case SweepParameter::v_c_ratio:
      if (!(value > 0.0)) throw ConfigError("v_c ratio must be positive");
      r_bn = r_b_anchor / std::sqrt(value);
      break;
  }
  params.validate();
  return {params, r_bn};
}

SensitivityFamily sensitivity_sweep(SweepParameter p, std::span<const double> values,
                                    double r_b_anchor, std::span<const double> t_F_values,
                                    const SkinExposureParams& reference,
                                    const DamageOptions& options) {
  SensitivityFamily family;
  family.parameter = p;
  family.r_b_anchor = r_b_anchor;
  for (double v : values) {
    SensitivityMember m;
    m.value = v;
    std::tie(m.params, m.r_bn) = apply_sweep_value(p, v, r_b_anchor, reference);
    m.scales = normalize(m.params);
    m.curve = omega_curve(m.r_bn, t_F_values, m.params, options);
    family.members.push_back(std::move(m));
  }
  return family;
}

namespace {

constexpr double kWindowUpper = 1e4;
constexpr double kWindowTol = 1e-4;
constexpr int kScanPerDecade = 8;

}  // namespace

double flight_time_for_omega(double target, double r_bn, const SkinExposureParams& params,
                             const DamageOptions& options) {
  const double lo = params.t_R + 1e-3;
  const double log_target = std::log(target);
  const auto excess = [&](double t_F) {
    return std::log(run_exposure(t_F, r_bn, params, options).Omega) - log_target;
  };
  // Omega falls with t_F; scan upward for the first sample below target.
  const std::vector<double> scan = log_spaced(lo, kWindowUpper, kScanPerDecade);
  double prev_t = scan.front();
  double prev_f = excess(prev_t);
  if (prev_f < 0.0) {
    throw NoBracket("Omega is already below " + std::to_string(target) + " at t_F = " +
                    std::to_string(prev_t) + " s");
  }
  for (std::size_t i = 1; i < scan.size(); ++i) {
    const double f = excess(scan[i]);
    if (f <= 0.0) {
      return solve_bracketed(excess, prev_t, scan[i], prev_f, f, RootTolerance{kWindowTol, 0.0});
    }
    prev_t = scan[i];
    prev_f = f;
  }
  throw NoBracket("Omega stays above " + std::to_string(target) + " up to t_F = 1e4 s");
}

TransitionWindow transition_window(double r_bn, const SkinExposureParams& params,
                                   const DamageOptions& options) {
  TransitionWindow w;
  w.t_F_first_degree = flight_time_for_omega(kFirstDegreeOmega, r_bn, params, options);
  w.t_F_second_degree = flight_time_for_omega(kSecondDegreeOmega, r_bn, params, options);
  return w;
}

}  // namespace thermaldose
