#include "thermaldose/parameters.hpp"

#include <cmath>
#include <string>

#include "thermaldose/damage_model.hpp"
#include "thermaldose/errors.hpp"

namespace thermaldose {

void SkinExposureParams::validate() const {
  const auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw ConfigError(std::string("parameter ") + name + " must be finite and positive");
    }
  };
  check(rho_m, "rho_m");
  check(C_p, "C_p");
  check(k, "k");
  check(mu_inv, "mu_inv");
  check(t_R, "t_R");
  check(A, "A");
  check(dE_a, "dE_a");
  check(R, "R");
  if (!std::isfinite(T_base) || !std::isfinite(T_act)) {
    throw ConfigError("temperatures must be finite");
  }
  if (T_base + kCelsiusToKelvin <= 0.0) throw ConfigError("T_base below absolute zero");
  if (!(T_act > T_base)) throw ConfigError("T_act must exceed T_base");
}

SkinExposureParams default_params(SrtPreset preset) {
  SkinExposureParams p;
  switch (preset) {
    case SrtPreset::Combined: p.t_R = 0.275; break;
    case SrtPreset::Female: p.t_R = 0.281; break;
    case SrtPreset::Male: p.t_R = 0.268; break;
  }
  return p;
}

SrtPreset parse_srt_preset(std::string_view name) {
  if (name == "combined") return SrtPreset::Combined;
  if (name == "female") return SrtPreset::Female;
  if (name == "male") return SrtPreset::Male;
  throw ConfigError("unknown SRT preset '" + std::string(name) + "' (combined|female|male)");
}

NormalizationScales normalize(const SkinExposureParams& params) {
  params.validate();
  NormalizationScales s;
  const double mu = params.mu();
  s.z_s = params.mu_inv;
  s.t_s = params.rho_cp() / (params.k * mu * mu);
  s.P_s = params.k * mu * (params.T_act - params.T_base);
  s.t_Rn = params.t_R / s.t_s;
  s.coeffs = damage_coefficients(params);
  return s;
}

}  // namespace thermaldose
