#pragma once

#include <string_view>

namespace thermaldose {

inline constexpr double kCelsiusToKelvin = 273.15;

/// Physical constants of the single-layer skin model. SI units unless noted.
struct SkinExposureParams {
  double rho_m = 1116.0;    ///< mass density, kg/m^3
  double C_p = 3300.0;      ///< specific heat, J/(kg K)
  double k = 0.445;         ///< conductivity, W/(m K)
  double mu_inv = 0.16e-3;  ///< penetration depth 1/mu, m
  double T_base = 32.0;     ///< baseline temperature, degC
  double T_act = 40.4;      ///< nociceptor activation temperature, degC
  double t_R = 0.275;       ///< simple reaction time, s
  double A = 8.82e94;       ///< Arrhenius frequency factor, 1/s
  double dE_a = 6.03e5;     ///< activation energy, J/mol
  double R = 8.314;         ///< gas constant, J/(mol K)

  double mu() const { return 1.0 / mu_inv; }
  double rho_cp() const { return rho_m * C_p; }

  /// Throws ConfigError unless every field is finite and positive and T_act > T_base.
  void validate() const;

  bool operator==(const SkinExposureParams&) const = default;
};

/// Arrhenius coefficients in normalized time and temperature.
struct DamageCoefficients {
  double c1 = 0.0;  ///< t_s * A
  double c2 = 0.0;  ///< R * T_base[K] / dE_a
  double c3 = 0.0;  ///< R * (T_act - T_base) / dE_a
};

/// Scales of the normalized formulation. The lateral scale r_s depends on the
/// unknown volume threshold and is never materialized; beam radii are always
/// expressed as multiples of it.
struct NormalizationScales {
  double z_s = 0.0;   ///< depth scale 1/mu, m
  double t_s = 0.0;   ///< diffusion time rho C_p / (k mu^2), s
  double P_s = 0.0;   ///< power density k mu (T_act - T_base), W/m^2
  double t_Rn = 0.0;  ///< t_R / t_s
  DamageCoefficients coeffs;

  double to_normalized_time(double t_seconds) const { return t_seconds / t_s; }
  double to_seconds(double t_n) const { return t_n * t_s; }
  /// P_nd -> W/cm^2.
  double to_w_per_cm2(double p_nd) const { return p_nd * P_s * 1e-4; }
};

/// Normalized activated-volume threshold: the volume of a cylinder of unit
/// radius and unit height.
inline constexpr double kVolumeThresholdNd = 3.14159265358979323846;

enum class SrtPreset { Combined, Female, Male };

/// Literature defaults; the reaction time selected by preset (275/281/268 ms).
SkinExposureParams default_params(SrtPreset preset = SrtPreset::Combined);

SrtPreset parse_srt_preset(std::string_view name);

NormalizationScales normalize(const SkinExposureParams& params);

}  // namespace thermaldose
