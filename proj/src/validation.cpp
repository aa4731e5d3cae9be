#include "thermaldose/validation.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "thermaldose/damage_model.hpp"
#include "thermaldose/fd_oracle.hpp"
#include "thermaldose/scenario.hpp"

namespace thermaldose {
namespace {

constexpr double kFdTolerance = 1e-3;
constexpr double kQuadratureTolerance = 1e-5;
constexpr double kRefinementTolerance = 1e-6;

CheckResult at_most(std::string name, double value, double tol) {
  return {std::move(name), value, tol, value <= tol};
}

void fd_checks(const ValidationOptions& options, std::vector<CheckResult>& out) {
  FdConfig on;
  if (options.coarse) {
    on.nz = 31;
    on.dt = 0.5;
    on.sample_every = 1;
  }
  out.push_back(at_most("fd: max |U_fd - U|, power on", max_error_vs_closed_form(on), kFdTolerance));

  FdConfig off = on;
  off.t_off = 2.0;
  out.push_back(
      at_most("fd: max |U_fd - U|, power off at t=2", max_error_vs_closed_form(off), kFdTolerance));

  FdConfig base{30.0, 301, 0.02, 5.0, std::nullopt, 5};
  FdConfig fine{30.0, 601, 0.01, 5.0, std::nullopt, 10};
  const double ratio = max_error_vs_closed_form(base) / max_error_vs_closed_form(fine);
  // second order: doubling both resolutions should cut the error about 4x
  out.push_back({"fd: error ratio under grid doubling (3..5)", ratio, 4.0,
                 ratio >= 3.0 && ratio <= 5.0});
}

std::string format_radius(double r) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%g", r);
  return buf;
}

void quadrature_checks(const ValidationOptions& options, std::vector<CheckResult>& out) {
  const SkinExposureParams params = default_params();
  const NormalizationScales scales = normalize(params);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> t_f_dist(0.5, 5.0);
  std::uniform_real_distribution<double> radius_dist(0.75, 2.0);
  for (int i = 0; i < 5; ++i) {
    const double t_f = t_f_dist(rng);
    const double r_b = radius_dist(rng);
    const ExposureOutcome o = run_exposure(t_f, r_b, params);
    const double ref = damage_integral_reference(o.flight.p_nd, o.flight.t_fn,
                                                 scales.to_normalized_time(o.t_stl), scales.coeffs);
    const double rel = std::fabs(o.Omega - ref) / ref;
    out.push_back(at_most("quadrature: Simpson vs adaptive, case " + std::to_string(i + 1), rel,
                          kQuadratureTolerance));
  }

  // t_F = 1 s at r_b = r_s and 1.25 r_s
  for (const double r_b : {1.0, 1.25}) {
    const ExposureOutcome o = run_exposure(1.0, r_b, params);
    const double coarse =
        damage_integral(o.flight.p_nd, o.flight.t_fn, scales.coeffs, {512, 512, 0.5}).omega;
    const double fine =
        damage_integral(o.flight.p_nd, o.flight.t_fn, scales.coeffs, {1024, 1024, 0.5}).omega;
    out.push_back(at_most("quadrature: refinement 512 -> 1024, r_b=" + format_radius(r_b),
                          std::fabs(coarse - fine) / fine, kRefinementTolerance));
  }
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> out;
  if (!options.quadrature_only) fd_checks(options, out);
  quadrature_checks(options, out);
  return out;
}

}  // namespace thermaldose
