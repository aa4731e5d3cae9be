#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "thermaldose/errors.hpp"

namespace thermaldose {

struct RootTolerance {
  double abs = 0.0;
  double rel = 1e-12;
  int max_iter = 300;

  double width(double x) const { return abs + rel * std::fabs(x); }
};

/// Root of f on [lo, hi] given f(lo) and f(hi) of opposite sign (or zero).
/// Secant steps inside the bracket, with a bisection forced whenever a step
/// fails to halve the bracket, so convergence is never slower than bisection.
template <typename F>
double solve_bracketed(F&& f, double lo, double hi, double f_lo, double f_hi,
                       const RootTolerance& tol) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw NoBracket("root is not bracketed on [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  bool force_bisect = false;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double span = hi - lo;
    if (span <= tol.width(mid)) return mid;

    double x = mid;
    if (!force_bisect) {
      const double secant = hi - f_hi * span / (f_hi - f_lo);
      // keep secant iterates off the endpoints so the bracket keeps shrinking
      const double guard = 0.5 * tol.width(mid);
      if (std::isfinite(secant) && secant > lo + guard && secant < hi - guard) x = secant;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    force_bisect = !force_bisect && (hi - lo) > 0.5 * span;
  }
  return 0.5 * (lo + hi);
}

template <typename F>
double solve_bracketed(F&& f, double lo, double hi, const RootTolerance& tol) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  return solve_bracketed(f, lo, hi, f_lo, f_hi, tol);
}

/// Geometric outward search for the upper end of a bracket: starting at hi,
/// multiplies by factor until pred(hi) holds. Returns the first hi satisfying it.
template <typename Pred>
double grow_until(Pred&& pred, double hi, double factor, double limit, const char* what) {
  while (!pred(hi)) {
    hi *= factor;
    if (!(hi <= limit)) throw NoBracket(std::string("no bracket found for ") + what);
  }
  return hi;
}

}  // namespace thermaldose
