#include "thermaldose/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

// Rational Chebyshev approximations of W. J. Cody (Math. Comp. 23, 1969),
// in the three-interval form of the netlib CALERF routine.

namespace thermaldose::sf {
namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kSmallBreak = 0.46875;
constexpr double kMidBreak = 4.0;
constexpr double kErfcUnderflow = 26.543;
constexpr double kErfcxNegLimit = -26.628;
constexpr double kErfcxAsymptotic = 6.71e7;

// erf on |x| <= 0.46875
constexpr std::array<double, 5> kA = {3.16112374387056560e00, 1.13864154151050156e02,
                                      3.77485237685302021e02, 3.20937758913846947e03,
                                      1.85777706184603153e-1};
constexpr std::array<double, 4> kB = {2.36012909523441209e01, 2.44024637934444173e02,
                                      1.28261652607737228e03, 2.84423683343917062e03};
// erfcx on 0.46875 < x <= 4
constexpr std::array<double, 9> kC = {5.64188496988670089e-1, 8.88314979438837594e00,
                                      6.61191906371416295e01, 2.98635138197400131e02,
                                      8.81952221241769090e02, 1.71204761263407058e03,
                                      2.05107837782607147e03, 1.23033935479799725e03,
                                      2.15311535474403846e-8};
constexpr std::array<double, 8> kD = {1.57449261107098347e01, 1.17693950891312499e02,
                                      5.37181101862009858e02, 1.62138957456669019e03,
                                      3.29079923573345963e03, 4.36261909014324716e03,
                                      3.43936767414372164e03, 1.23033935480374942e03};
// erfcx on x > 4, in powers of 1/x^2
constexpr std::array<double, 6> kP = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                      1.25781726111229246e-1, 1.60837851487422766e-2,
                                      6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr std::array<double, 5> kQ = {2.56852019228982242e00, 1.87295284992346047e00,
                                      5.27905102951428412e-1, 6.05183413124413191e-2,
                                      2.33520497626869185e-3};

double erf_small(double x) {
  const double xsq = x * x;
  double num = kA[4] * xsq;
  double den = xsq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kA[i]) * xsq;
    den = (den + kB[i]) * xsq;
  }
  return x * (num + kA[3]) / (den + kB[3]);
}

// erfcx for y in (0.46875, 4].
double erfcx_mid(double y) {
  double num = kC[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + kC[i]) * y;
    den = (den + kD[i]) * y;
  }
  return (num + kC[7]) / (den + kD[7]);
}

// erfcx for y > 4.
double erfcx_large(double y) {
  if (y >= kErfcxAsymptotic) return kInvSqrtPi / y;
  const double inv_sq = 1.0 / (y * y);
  double num = kP[5] * inv_sq;
  double den = inv_sq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * inv_sq;
    den = (den + kQ[i]) * inv_sq;
  }
  const double r = inv_sq * (num + kP[4]) / (den + kQ[4]);
  return (kInvSqrtPi - r) / y;
}

// exp(-y^2) with y^2 split so the rounding of y*y does not leak into the result.
double exp_neg_square(double y) {
  const double head = std::trunc(y * 16.0) / 16.0;
  const double tail = (y - head) * (y + head);
  return std::exp(-head * head) * std::exp(-tail);
}

double exp_square(double y) {
  const double head = std::trunc(y * 16.0) / 16.0;
  const double tail = (y - head) * (y + head);
  return std::exp(head * head) * std::exp(tail);
}

// erfcx for y >= 0.
double erfcx_nonneg(double y) {
  if (y <= kSmallBreak) return std::exp(y * y) * (1.0 - erf_small(y));
  if (y <= kMidBreak) return erfcx_mid(y);
  return erfcx_large(y);
}

}  // namespace

double erfc(double x) {
  const double y = std::fabs(x);
  double upper;  // erfc(|x|)
  if (y <= kSmallBreak) {
    return 1.0 - erf_small(x);
  } else if (y <= kMidBreak) {
    upper = exp_neg_square(y) * erfcx_mid(y);
  } else if (y >= kErfcUnderflow) {
    upper = 0.0;
  } else {
    upper = exp_neg_square(y) * erfcx_large(y);
  }
  return x < 0.0 ? 2.0 - upper : upper;
}

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.0) return erfcx_nonneg(x);
  if (x < kErfcxNegLimit) return std::numeric_limits<double>::infinity();
  const double y = -x;
  if (y <= kSmallBreak) return std::exp(y * y) * (1.0 + erf_small(y));
  const double two_exp = 2.0 * exp_square(y);
  return two_exp - erfcx_nonneg(y);
}

}  // namespace thermaldose::sf
