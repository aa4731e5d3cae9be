#pragma once

namespace thermaldose::sf {

/// Complementary error function, 2/sqrt(pi) * integral_x^inf exp(-u^2) du.
/// Underflows to 0 for x >= 26.543.
double erfc(double x);

/// Scaled complementary error function exp(x^2) * erfc(x), evaluated without
/// forming exp(x^2). Finite for x > -26.628; accurate to about 1e-15 relative.
double erfcx(double x);

}  // namespace thermaldose::sf
