#include "thermaldose/damage_model.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"
#include "thermaldose/quadrature.hpp"

namespace thermaldose {

std::string_view to_string(BurnClass burn) {
  switch (burn) {
    case BurnClass::None: return "none";
    case BurnClass::FirstDegree: return "first-degree";
    case BurnClass::SecondDegree: return "second-degree";
    case BurnClass::ThirdDegree: return "third-degree";
  }
  return "unknown";
}

DamageCoefficients damage_coefficients(const SkinExposureParams& params) {
  const double mu = params.mu();
  DamageCoefficients c;
  c.c1 = params.rho_cp() / (params.k * mu * mu) * params.A;
  c.c2 = params.R * (params.T_base + kCelsiusToKelvin) / params.dE_a;
  c.c3 = params.R * (params.T_act - params.T_base) / params.dE_a;
  return c;
}

double settlement_time(double p_nd, double t_fn, double c_stl) {
  const double tail = p_nd * t_fn / (c_stl * std::sqrt(std::numbers::pi));
  const double t_stl = 0.5 * t_fn + tail * tail;
  assert(t_stl > t_fn);
  return t_stl;
}

double damage_rate(double t_nd, const DamageCoefficients& coeffs) {
  return coeffs.c1 * std::exp(-1.0 / (coeffs.c2 + coeffs.c3 * t_nd));
}

TimeGrid build_grids(double t_fn, double t_stl_n, int n1, int n2) {
  if (!(t_fn > 0.0)) throw InvalidGrid("t_Fn must be positive");
  if (!(t_stl_n > t_fn)) {
    throw InvalidGrid("settlement time " + std::to_string(t_stl_n) +
                      " must exceed flight action time " + std::to_string(t_fn));
  }
  if (n1 <= 0 || n2 <= 0) throw InvalidGrid("grid sizes must be positive");

  TimeGrid grid;
  grid.nodes.reserve(static_cast<std::size_t>(n1) + n2 + 1);
  for (int j = 0; j < n1; ++j) grid.nodes.push_back(t_fn * j / n1);
  grid.split = grid.nodes.size();
  grid.nodes.push_back(t_fn);
  const double beta = std::sqrt(t_fn / t_stl_n);
  for (int j = 1; j <= n2; ++j) {
    const double s = 1.0 - (1.0 - beta) * j / n2;
    grid.nodes.push_back(t_fn / (s * s));
  }
  return grid;
}

namespace {

template <typename F>
double simpson_over(const std::vector<double>& nodes, std::size_t first, std::size_t last,
                    F&& rate) {
  double sum = 0.0;
  double left = rate(nodes[first]);
  for (std::size_t j = first; j < last; ++j) {
    const double a = nodes[j];
    const double b = nodes[j + 1];
    const double right = rate(b);
    sum += (left + 4.0 * rate(0.5 * (a + b)) + right) * (b - a) / 6.0;
    left = right;
  }
  return sum;
}

}  // namespace

DamageIntegral damage_integral(double p_nd, double t_fn, const DamageCoefficients& coeffs,
                               const DamageOptions& options) {
  DamageIntegral out;
  out.t_stl_n = settlement_time(p_nd, t_fn, options.c_stl);
  const TimeGrid grid = build_grids(t_fn, out.t_stl_n, options.n1, options.n2);
  const auto rate = [&](double t) { return damage_rate(surface_trace(p_nd, t_fn, t), coeffs); };
  out.on_phase = simpson_over(grid.nodes, 0, grid.split, rate);
  out.off_phase = simpson_over(grid.nodes, grid.split, grid.nodes.size() - 1, rate);
  out.omega = out.on_phase + out.off_phase;
  return out;
}

double damage_integral_reference(double p_nd, double t_fn, double t_stl_n,
                                 const DamageCoefficients& coeffs, double rel_tol) {
  const auto rate = [&](double t) { return damage_rate(surface_trace(p_nd, t_fn, t), coeffs); };
  // Geometric partitions toward t_Fn, where the rate peaks and the trace has
  // its derivative jump.
  constexpr int kLevels = 24;
  // Absolute target for each piece, from a coarse estimate of the whole.
  const double scale = std::abs(integrate_adaptive(rate, 0.0, t_fn, 1e-3).value) +
                       std::abs(integrate_adaptive(rate, t_fn, t_stl_n, 1e-3).value);
  const double abs_tol = rel_tol * scale / (2 * kLevels + 1);
  double total = 0.0;
  double left = 0.0;
  for (int level = 1; level <= kLevels; ++level) {
    const double right = level == kLevels ? t_fn : t_fn - t_fn * std::ldexp(1.0, -level);
    total += integrate_adaptive(rate, left, right, rel_tol, abs_tol).value;
    left = right;
  }
  const double span = t_stl_n - t_fn;
  for (int level = kLevels; level >= 0; --level) {
    const double next = level == 0 ? t_stl_n : t_fn + span * std::ldexp(1.0, -level);
    total += integrate_adaptive(rate, left, next, rel_tol, abs_tol).value;
    left = next;
  }
  return total;
}

BurnClass classify_burn(double omega) {
  if (omega >= kThirdDegreeOmega) return BurnClass::ThirdDegree;
  if (omega >= kSecondDegreeOmega) return BurnClass::SecondDegree;
  if (omega >= kFirstDegreeOmega) return BurnClass::FirstDegree;
  return BurnClass::None;
}

}  // namespace thermaldose
