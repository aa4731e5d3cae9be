#include "thermaldose/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace thermaldose {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

QuadratureResult panel(const std::function<double(double)>& f, double a, double b) {
  QuadratureResult r;
  r.value = Rule::integrate(f, a, b, 0, 0.0, &r.error_estimate);
  return r;
}

QuadratureResult refine(const std::function<double(double)>& f, double a, double b,
                        const QuadratureResult& whole, double tol, unsigned depth) {
  if (depth == 0 || whole.error_estimate <= tol) return whole;
  const double m = 0.5 * (a + b);
  if (!(m > a && m < b)) return whole;
  const QuadratureResult left = panel(f, a, m);
  const QuadratureResult right = panel(f, m, b);
  const QuadratureResult l = refine(f, a, m, left, 0.5 * tol, depth - 1);
  const QuadratureResult r = refine(f, m, b, right, 0.5 * tol, depth - 1);
  return {l.value + r.value, l.error_estimate + r.error_estimate};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol, unsigned max_depth) {
  if (!(b > a)) return {};
  const QuadratureResult whole = panel(f, a, b);
  // Pin the relative target to the coarse estimate so that subdivision does
  // not chase rounding noise on panels that contribute nothing.
  const double tol = std::max(rel_tol * std::abs(whole.value), abs_tol);
  return refine(f, a, b, whole, tol, max_depth);
}

}  // namespace thermaldose
