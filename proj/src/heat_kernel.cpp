#include "thermaldose/heat_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "thermaldose/special_functions.hpp"

namespace thermaldose {
namespace {

using std::numbers::inv_sqrtpi;
using std::numbers::pi;

constexpr double kSeriesBreak = 0.1;
constexpr double kSmallTimeBreak = 0.25;
constexpr int kFluxTerms = 24;

// Backward sweep of i^{k-2} = 2k i^k + 2x i^{k-1} from seeds at k = top, top+1.
void backward_sweep(double x, int top, double seed_top, double seed_above, int kmax,
                    double* out) {
  double above = seed_above;
  double cur = seed_top;
  for (int k = top; k >= 1; --k) {
    const double below = 2.0 * (k + 1) * above + 2.0 * x * cur;
    above = cur;
    cur = below;
    if (k - 1 <= kmax) out[k - 1] = cur;
    if (std::fabs(cur) > 1e200) {
      above *= 1e-200;
      cur *= 1e-200;
      for (int j = std::max(k - 1, 0); j <= kmax; ++j) out[j] *= 1e-200;
    }
  }
}

// e^{x^2} i^k erfc(x) for k = 0..kmax, x >= 0, by Miller's algorithm. The
// second solution of the recurrence dies off like exp(-2x sqrt(2k)) in the
// backward direction, so for larger x a long sweep normalized at k = 0 is
// enough. Near x = 0 it is not suppressed at all (the even and odd orders
// decouple), and two short sweeps are fitted to the exact k = 0, 1 values.
void scaled_repeated_erfc(double x, int kmax, double* out) {
  constexpr int kMax = 64;
  const double f0 = sf::erfcx(x);
  if (x >= 0.3) {
    // exp(-2x sqrt(2 top)) < 1e-17
    const int top = kmax + 10 + static_cast<int>(std::ceil(200.0 / (x * x)));
    backward_sweep(x, top, 1.0, 0.0, kmax, out);
    const double norm = f0 / out[0];
    for (int k = 0; k <= kmax; ++k) out[k] *= norm;
    return;
  }
  const double f1 = inv_sqrtpi - x * f0;
  double u[kMax], w[kMax];
  backward_sweep(x, kmax + 10, 1.0, 0.0, kmax, u);
  backward_sweep(x, kmax + 10, 0.0, 1.0, kmax, w);
  // both sweeps grow by many orders of magnitude; rescale before the 2x2 solve
  const double su = 1.0 / std::fmax(std::fabs(u[0]), std::fabs(u[1]));
  const double sw = 1.0 / std::fmax(std::fabs(w[0]), std::fabs(w[1]));
  for (int k = 0; k <= kmax; ++k) {
    u[k] *= su;
    w[k] *= sw;
  }
  const double det = u[0] * w[1] - u[1] * w[0];
  const double alpha = (f0 * w[1] - f1 * w[0]) / det;
  const double beta = (u[0] * f1 - u[1] * f0) / det;
  for (int k = 0; k <= kmax; ++k) out[k] = alpha * u[k] + beta * w[k];
}

// Small-t form without cancellation: the whole-line response expm1(t) e^{-z}
// minus the surface-flux correction
//   sum_{n>=1} (4t)^{n+1/2} i^{2n+1} erfc(z / sqrt(4t)).
double kernel_u_small_t(double z, double t) {
  const double bulk = std::expm1(t) * std::exp(-z);
  const double x = z / std::sqrt(4.0 * t);
  // beyond x = 7 the correction is below e^{-42} of the bulk term
  if (x > 7.0) return bulk;
  double j[2 * kFluxTerms + 2];
  scaled_repeated_erfc(x, 2 * kFluxTerms + 1, j);
  const double four_t = 4.0 * t;
  double power = four_t * std::sqrt(four_t);
  double flux = 0.0;
  for (int n = 1; n <= kFluxTerms; ++n) {
    const double term = power * j[2 * n + 1];
    flux += term;
    if (term < 1e-18 * flux) break;
    power *= four_t;
  }
  return bulk - std::exp(-x * x) * flux;
}

// h(s) = sum_{n>=2} (-1)^n s^{n/2} / Gamma(n/2 + 1); the n = 0, 1 terms of
// erfcx(sqrt s) cancel against -1 + 2 sqrt(s/pi).
double kernel_h_series(double s) {
  const double root = std::sqrt(s);
  double power = s;  // s^{n/2}, starting at n = 2
  double sum = 0.0;
  for (int n = 2; n < 40; ++n) {
    const double term = power / std::tgamma(0.5 * n + 1.0);
    sum += (n % 2 == 0) ? term : -term;
    if (term < 1e-18 * sum) break;
    power *= root;
  }
  return sum;
}

}  // namespace

double kernel_u(double z_n, double t_n) {
  if (t_n <= 0.0) return 0.0;
  if (t_n < kSmallTimeBreak) return kernel_u_small_t(z_n, t_n);
  const double z = z_n;
  const double t = t_n;
  const double root4t = std::sqrt(4.0 * t);
  const double gauss = std::exp(-z * z / (4.0 * t));
  const double a = (2.0 * t - z) / root4t;
  const double b = (2.0 * t + z) / root4t;

  // -e^{-z} + (1/2) e^{t-z} erfc(a), with the e^{a^2} factor folded into gauss.
  double head;
  if (a >= 0.0) {
    head = -std::exp(-z) + 0.5 * gauss * sf::erfcx(a);
  } else {
    // erfcx(a) = 2 e^{a^2} - erfcx(-a), and gauss * e^{a^2} = e^{t-z}.
    head = std::exp(-z) * std::expm1(t) - 0.5 * gauss * sf::erfcx(-a);
  }
  return head + gauss * (0.5 * sf::erfcx(b) + 2.0 * std::sqrt(t / pi)) -
         z * sf::erfc(z / root4t);
}

double kernel_h(double s) {
  if (s <= 0.0) return 0.0;
  if (s < kSeriesBreak) return kernel_h_series(s);
  return 2.0 * inv_sqrtpi * std::sqrt(s) - 1.0 + sf::erfcx(std::sqrt(s));
}

double surface_trace(double p_nd, double t_fn, double t_n) {
  return p_nd * (kernel_h(t_n) - kernel_h(t_n - t_fn));
}

double temp_field_nd(double p_nd, double r_bn, double r_n, double z_n, double t_n,
                     std::optional<double> t_fn) {
  const double lateral = std::exp(-2.0 * r_n * r_n / (r_bn * r_bn));
  double u = kernel_u(z_n, t_n);
  if (t_fn) u -= kernel_u(z_n, t_n - *t_fn);
  return p_nd * lateral * u;
}

double to_physical(double t_nd, const SkinExposureParams& params) {
  return params.T_base + (params.T_act - params.T_base) * t_nd;
}

TempTraceNd sample_surface_trace(double p_nd, double t_fn, std::span<const double> times) {
  TempTraceNd trace;
  trace.t_n.reserve(times.size());
  trace.t_nd.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("trace times must be strictly increasing");
    }
    trace.t_n.push_back(times[i]);
    trace.t_nd.push_back(surface_trace(p_nd, t_fn, times[i]));
  }
  return trace;
}

}  // namespace thermaldose
