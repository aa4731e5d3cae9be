#pragma once

#include <functional>

namespace thermaldose {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive bisection with a 31-point Gauss-Kronrod rule on each panel. A
/// panel is accepted once its error estimate is below max(rel_tol*|I|, abs_tol)
/// scaled to its share of [a, b], or at max_depth.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol = 0.0,
                                    unsigned max_depth = 16);

}  // namespace thermaldose
