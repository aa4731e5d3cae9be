#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermaldose/damage_model.hpp"
#include "thermaldose/parameters.hpp"

namespace thermaldose::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitBadConfig = 2,
  kExitInfeasible = 3,
};

/// Resolved settings shared by every subcommand.
struct RunConfig {
  SkinExposureParams params = default_params();
  DamageOptions damage;
};

/// Partial overrides, as read from a config file or flags.
struct ConfigOverrides {
  std::optional<std::string> srt_preset;
  std::optional<double> rho_m, C_p, k, mu_inv, T_base, T_act, t_R, A, dE_a, R;
  std::optional<int> n1, n2;
  std::optional<double> c_stl;
};

/// Reads a JSON object whose keys mirror ConfigOverrides ("rho_m", "N1", ...).
/// Throws ConfigError on unreadable files, unknown keys, or wrong types.
ConfigOverrides load_config_file(const std::string& path);

/// Applies overrides on top of cfg in place and validates the result.
void apply_overrides(RunConfig& cfg, const ConfigOverrides& o);

/// Numeric CSV field: 9 significant digits.
std::string format_number(double v);

/// '#'-prefixed provenance block: program version, command, resolved
/// parameters, derived scales, and grid settings.
void write_metadata(std::ostream& os, std::string_view command, const RunConfig& cfg,
                    const std::vector<std::string>& extra = {});

/// Entry point; args exclude the program name. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermaldose::cli
