#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "thermaldose/parameters.hpp"

namespace thermaldose {

enum class BurnClass { None, FirstDegree, SecondDegree, ThirdDegree };

std::string_view to_string(BurnClass burn);

inline constexpr double kFirstDegreeOmega = 0.53;
inline constexpr double kSecondDegreeOmega = 1.0;
inline constexpr double kThirdDegreeOmega = 1e4;

/// Quadrature and settlement settings for the damage integral.
struct DamageOptions {
  int n1 = 1024;        ///< Simpson panels on [0, t_Fn]
  int n2 = 1024;        ///< Simpson panels on [t_Fn, t_stl,n]
  double c_stl = 0.5;   ///< surface T_nd that defines settlement
};

/// Nodes of the two-segment grid. nodes[split] == t_Fn.
struct TimeGrid {
  std::vector<double> nodes;
  std::size_t split = 0;

  double t_fn() const { return nodes[split]; }
  double t_stl() const { return nodes.back(); }
};

struct DamageIntegral {
  double omega = 0.0;
  double on_phase = 0.0;   ///< contribution of [0, t_Fn]
  double off_phase = 0.0;  ///< contribution of [t_Fn, t_stl,n]
  double t_stl_n = 0.0;
};

DamageCoefficients damage_coefficients(const SkinExposureParams& params);

/// Asymptotic time at which the post-exposure surface trace falls back to c_stl:
/// t_Fn / 2 + (P t_Fn / (c_stl sqrt(pi)))^2.
double settlement_time(double p_nd, double t_fn, double c_stl = 0.5);

/// Arrhenius rate c1 exp(-1 / (c2 + c3 T_nd)) per unit normalized time.
double damage_rate(double t_nd, const DamageCoefficients& coeffs);

/// Uniform nodes on [0, t_Fn] joined to t_Fn (1 - (1 - beta) j / N2)^-2 on
/// [t_Fn, t_stl,n], beta = sqrt(t_Fn / t_stl,n). Throws InvalidGrid.
TimeGrid build_grids(double t_fn, double t_stl_n, int n1, int n2);

/// Composite Simpson evaluation of Omega over the two-segment grid.
DamageIntegral damage_integral(double p_nd, double t_fn, const DamageCoefficients& coeffs,
                               const DamageOptions& options = {});

/// Adaptive Gauss-Kronrod evaluation of the same integral over [0, t_stl_n];
/// used to cross-check the Simpson sums.
double damage_integral_reference(double p_nd, double t_fn, double t_stl_n,
                                 const DamageCoefficients& coeffs, double rel_tol = 1e-10);

BurnClass classify_burn(double omega);

}  // namespace thermaldose
