#include "thermaldose/cli_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"
#include "thermaldose/scenario.hpp"
#include "thermaldose/validation.hpp"

#ifndef THERMALDOSE_VERSION
#define THERMALDOSE_VERSION "dev"
#endif

namespace thermaldose::cli {
namespace fs = std::filesystem;
using nlohmann::json;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

ConfigOverrides load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");

  ConfigOverrides o;
  const auto number = [&](const std::string& key, const json& v) {
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "srt_preset") {
      if (!value.is_string()) throw ConfigError("config key 'srt_preset' must be a string");
      o.srt_preset = value.get<std::string>();
    } else if (key == "rho_m") o.rho_m = number(key, value);
    else if (key == "C_p") o.C_p = number(key, value);
    else if (key == "k") o.k = number(key, value);
    else if (key == "mu_inv") o.mu_inv = number(key, value);
    else if (key == "T_base") o.T_base = number(key, value);
    else if (key == "T_act") o.T_act = number(key, value);
    else if (key == "t_R") o.t_R = number(key, value);
    else if (key == "A") o.A = number(key, value);
    else if (key == "dE_a") o.dE_a = number(key, value);
    else if (key == "R") o.R = number(key, value);
    else if (key == "c_stl") o.c_stl = number(key, value);
    else if (key == "N1" || key == "N2") {
      if (!value.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
      (key == "N1" ? o.n1 : o.n2) = value.get<int>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return o;
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o) {
  if (o.srt_preset) cfg.params.t_R = default_params(parse_srt_preset(*o.srt_preset)).t_R;
  const auto set = [](double& field, const std::optional<double>& v) {
    if (v) field = *v;
  };
  set(cfg.params.rho_m, o.rho_m);
  set(cfg.params.C_p, o.C_p);
  set(cfg.params.k, o.k);
  set(cfg.params.mu_inv, o.mu_inv);
  set(cfg.params.T_base, o.T_base);
  set(cfg.params.T_act, o.T_act);
  set(cfg.params.t_R, o.t_R);
  set(cfg.params.A, o.A);
  set(cfg.params.dE_a, o.dE_a);
  set(cfg.params.R, o.R);
  if (o.n1) cfg.damage.n1 = *o.n1;
  if (o.n2) cfg.damage.n2 = *o.n2;
  set(cfg.damage.c_stl, o.c_stl);
  cfg.params.validate();
  if (cfg.damage.n1 <= 0 || cfg.damage.n2 <= 0) throw ConfigError("N1 and N2 must be positive");
  if (!(cfg.damage.c_stl > 0.0)) throw ConfigError("c_stl must be positive");
}

void write_metadata(std::ostream& os, std::string_view command, const RunConfig& cfg,
                    const std::vector<std::string>& extra) {
  const auto& p = cfg.params;
  const NormalizationScales s = normalize(p);
  os << "# thermaldose " << THERMALDOSE_VERSION << '\n'
     << "# command: " << command << '\n'
     << "# params: rho_m=" << format_number(p.rho_m) << " C_p=" << format_number(p.C_p)
     << " k=" << format_number(p.k) << " mu_inv=" << format_number(p.mu_inv)
     << " T_base=" << format_number(p.T_base) << " T_act=" << format_number(p.T_act)
     << " t_R=" << format_number(p.t_R) << " A=" << format_number(p.A)
     << " dE_a=" << format_number(p.dE_a) << " R=" << format_number(p.R) << '\n'
     << "# scales: t_s=" << format_number(s.t_s) << " P_s_W_cm2=" << format_number(s.P_s * 1e-4)
     << " t_Rn=" << format_number(s.t_Rn) << " c1=" << format_number(s.coeffs.c1)
     << " c2=" << format_number(s.coeffs.c2) << " c3=" << format_number(s.coeffs.c3) << '\n'
     << "# grid: N1=" << cfg.damage.n1 << " N2=" << cfg.damage.n2
     << " c_stl=" << format_number(cfg.damage.c_stl) << '\n';
  for (const auto& line : extra) os << "# " << line << '\n';
}

namespace {

// Flags that every subcommand accepts.
struct CommonFlags {
  std::string config_path;
  ConfigOverrides overrides;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file; flags take precedence");
    app->add_option("--srt-preset", overrides.srt_preset, "reaction time preset: combined|female|male");
    app->add_option("--rho-m", overrides.rho_m, "mass density, kg/m^3");
    app->add_option("--cp", overrides.C_p, "specific heat, J/(kg K)");
    app->add_option("--k", overrides.k, "heat conductivity, W/(m K)");
    app->add_option("--mu-inv", overrides.mu_inv, "penetration depth, m");
    app->add_option("--T-base", overrides.T_base, "baseline temperature, degC");
    app->add_option("--T-act", overrides.T_act, "activation temperature, degC");
    app->add_option("--t-R", overrides.t_R, "reaction time, s");
    app->add_option("--A", overrides.A, "Arrhenius frequency factor, 1/s");
    app->add_option("--dEa", overrides.dE_a, "activation energy, J/mol");
    app->add_option("--R-gas", overrides.R, "gas constant, J/(mol K)");
    app->add_option("--N1", overrides.n1, "Simpson panels before power-off");
    app->add_option("--N2", overrides.n2, "Simpson panels after power-off");
    app->add_option("--c-stl", overrides.c_stl, "settlement temperature (nondimensional)");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (!config_path.empty()) apply_overrides(cfg, load_config_file(config_path));
    apply_overrides(cfg, overrides);
    return cfg;
  }
};

struct TimeRangeFlags {
  std::vector<double> t_F_list;
  std::optional<double> t_F_min, t_F_max;
  int per_decade = 60;

  void attach(CLI::App* app) {
    app->add_option("--tF", t_F_list, "explicit flight-action times, s")->delimiter(',');
    app->add_option("--tF-min", t_F_min, "lower end of the t_F range, s");
    app->add_option("--tF-max", t_F_max, "upper end of the t_F range, s");
    app->add_option("--points-per-decade", per_decade, "log-spaced density of the range");
  }

  std::vector<double> resolve() const {
    if (!t_F_list.empty()) {
      if (t_F_min || t_F_max) throw ConfigError("give either --tF or --tF-min/--tF-max");
      return t_F_list;
    }
    if (!t_F_min || !t_F_max) throw ConfigError("a t_F range (--tF-min, --tF-max) is required");
    if (!(*t_F_max > *t_F_min)) throw ConfigError("empty t_F range");
    return log_spaced(*t_F_min, *t_F_max, per_decade);
  }
};

constexpr std::string_view kCurveHeader = "t_F_s,omega,P_d0_W_cm2,T_max_C,burn_class";

void write_curve(std::ostream& os, const std::vector<CurvePoint>& curve) {
  os << kCurveHeader << '\n';
  for (const auto& pt : curve) {
    if (pt.outcome) {
      const auto& o = *pt.outcome;
      os << format_number(pt.t_F) << ',' << format_number(o.Omega) << ','
         << format_number(o.P_d0) << ',' << format_number(o.T_max) << ',' << to_string(o.burn)
         << '\n';
    } else {
      os << "# t_F=" << format_number(pt.t_F) << ": " << pt.error << '\n';
      os << format_number(pt.t_F) << ",nan,nan,nan,infeasible\n";
    }
  }
}

void write_trace(std::ostream& os, const ExposureOutcome& o, const SkinExposureParams& params,
                 int points) {
  const int half = std::max(1, points / 2);
  const double t_stl_n = o.scales.to_normalized_time(o.t_stl);
  const TimeGrid grid = build_grids(o.flight.t_fn, t_stl_n, half, half);
  os << "t_s,T_C\n";
  for (double t : grid.nodes) {
    os << format_number(o.scales.to_seconds(t)) << ','
       << format_number(to_physical(surface_trace(o.flight.p_nd, o.flight.t_fn, t), params))
       << '\n';
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path.string());
  return f;
}

std::string radius_tag(double r) {
  std::string s = format_number(r);
  for (char& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

int cmd_single(const RunConfig& cfg, double t_F, double r_b, const std::string& trace_out,
               int trace_points, std::ostream& out) {
  const ExposureOutcome o = run_exposure(t_F, r_b, cfg.params, cfg.damage);
  write_metadata(out, "single", cfg);
  out << "t_F_s,t_c_s,r_bn,P_d0_W_cm2,T_max_C,omega,burn_class,t_stl_s\n"
      << format_number(o.t_F) << ',' << format_number(o.t_c) << ',' << format_number(o.r_bn)
      << ',' << format_number(o.P_d0) << ',' << format_number(o.T_max) << ','
      << format_number(o.Omega) << ',' << to_string(o.burn) << ',' << format_number(o.t_stl)
      << '\n';
  out << "# flight action at " << format_number(o.t_F) << " s (initiation at "
      << format_number(o.t_c) << " s) with beam radius " << format_number(o.r_bn) << " r_s\n"
      << "# absorbed center power density " << format_number(o.P_d0) << " W/cm^2, peak surface "
      << format_number(o.T_max) << " C\n"
      << "# Omega = " << format_number(o.Omega) << " -> " << to_string(o.burn)
      << ", settled by " << format_number(o.t_stl) << " s\n";
  if (!trace_out.empty()) {
    auto f = open_output(trace_out);
    write_metadata(f, "single --trace-out", cfg, {"t_F=" + format_number(t_F) + " r_bn=" + format_number(r_b)});
    write_trace(f, o, cfg.params, trace_points);
  }
  return kExitOk;
}

int cmd_trace(const RunConfig& cfg, double t_F, double r_b, const std::string& path, int points,
              std::ostream& out) {
  const ExposureOutcome o = run_exposure(t_F, r_b, cfg.params, cfg.damage);
  const std::vector<std::string> extra{"t_F=" + format_number(t_F) + " r_bn=" + format_number(r_b)};
  if (path.empty()) {
    write_metadata(out, "trace", cfg, extra);
    write_trace(out, o, cfg.params, points);
  } else {
    auto f = open_output(path);
    write_metadata(f, "trace", cfg, extra);
    write_trace(f, o, cfg.params, points);
  }
  return kExitOk;
}

int cmd_curve(const RunConfig& cfg, const std::vector<double>& radii, const TimeRangeFlags& range,
              const std::string& out_dir, std::ostream& out) {
  const std::vector<double> t_F = range.resolve();
  if (radii.empty()) throw ConfigError("at least one --rb is required");
  if (out_dir.empty() && radii.size() > 1) throw ConfigError("--out-dir is required for several radii");
  for (double r : radii) {
    if (!(r > 0.0)) throw ConfigError("beam radius multiples must be positive");
  }
  for (double r : radii) {
    const auto curve = omega_curve(r, t_F, cfg.params, cfg.damage);
    const std::vector<std::string> extra{"r_bn=" + format_number(r)};
    if (out_dir.empty()) {
      write_metadata(out, "curve", cfg, extra);
      write_curve(out, curve);
    } else {
      fs::create_directories(out_dir);
      const fs::path path = fs::path(out_dir) / ("curve_rb" + radius_tag(r) + ".csv");
      auto f = open_output(path);
      write_metadata(f, "curve", cfg, extra);
      write_curve(f, curve);
      out << path.string() << '\n';
    }
  }
  return kExitOk;
}

int cmd_sensitivity(const RunConfig& cfg, const std::string& param_name,
                    const std::vector<double>& values, double anchor, const TimeRangeFlags& range,
                    const std::string& out_dir, std::ostream& out) {
  const SweepParameter param = parse_sweep_parameter(param_name);
  if (values.empty()) throw ConfigError("--values is required");
  if (!(anchor > 0.0)) throw ConfigError("--rb must be positive");
  const std::vector<double> t_F = range.resolve();
  const SensitivityFamily family =
      sensitivity_sweep(param, values, anchor, t_F, cfg.params, cfg.damage);

  fs::create_directories(out_dir);
  const std::string stem = "sensitivity_" + std::string(to_string(param));
  const fs::path manifest_path = fs::path(out_dir) / (stem + "_manifest.csv");
  auto manifest = open_output(manifest_path);
  write_metadata(manifest, "sensitivity", cfg,
                 {"param=" + param_name + " r_b_anchor=" + format_number(anchor)});
  manifest << "index,param,value,r_bn,r_bn_multiplier,t_s_s,P_s_W_cm2,t_Rn,c1,c2,c3,file\n";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    const std::string file = stem + "_" + std::to_string(i) + ".csv";
    RunConfig member_cfg{m.params, cfg.damage};
    auto f = open_output(fs::path(out_dir) / file);
    write_metadata(f, "sensitivity", member_cfg,
                   {"param=" + param_name + " value=" + format_number(m.value),
                    "r_bn=" + format_number(m.r_bn)});
    write_curve(f, m.curve);
    manifest << i << ',' << param_name << ',' << format_number(m.value) << ','
             << format_number(m.r_bn) << ',' << format_number(m.r_bn / anchor) << ','
             << format_number(m.scales.t_s) << ',' << format_number(m.scales.P_s * 1e-4) << ','
             << format_number(m.scales.t_Rn) << ',' << format_number(m.scales.coeffs.c1) << ','
             << format_number(m.scales.coeffs.c2) << ',' << format_number(m.scales.coeffs.c3)
             << ',' << file << '\n';
  }
  out << manifest_path.string() << '\n';
  return kExitOk;
}

int cmd_validate(const ValidationOptions& options, std::ostream& out) {
  const auto checks = run_validation(options);
  bool all = true;
  out << "check,value,tolerance,status\n";
  for (const auto& c : checks) {
    out << c.name << ',' << format_number(c.value) << ',' << format_number(c.tolerance) << ','
        << (c.passed ? "PASS" : "FAIL") << '\n';
    all = all && c.passed;
  }
  return all ? kExitOk : kExitValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skin thermal-injury risk for exposures lasting until flight action", "thermaldose"};
  app.require_subcommand(1);
  app.set_version_flag("--version", THERMALDOSE_VERSION);

  CommonFlags common;
  double t_F = 0.0;
  double r_b = 1.0;
  std::string trace_out;
  int trace_points = 400;

  auto* single = app.add_subcommand("single", "one exposure: P_d0, T_max, Omega, burn class");
  single->add_option("--tF", t_F, "observed flight-action time, s")->required();
  single->add_option("--rb", r_b, "beam radius as a multiple of r_s");
  single->add_option("--trace-out", trace_out, "write the surface temperature trace here");
  single->add_option("--trace-points", trace_points, "trace samples");
  common.attach(single);

  auto* trace = app.add_subcommand("trace", "surface temperature vs time for one exposure");
  std::string trace_path;
  trace->add_option("--tF", t_F, "observed flight-action time, s")->required();
  trace->add_option("--rb", r_b, "beam radius as a multiple of r_s");
  trace->add_option("--points", trace_points, "trace samples");
  trace->add_option("--out", trace_path, "output file (default stdout)");
  common.attach(trace);

  auto* curve = app.add_subcommand("curve", "Omega vs t_F for one or more beam radii");
  std::vector<double> radii;
  std::string out_dir;
  TimeRangeFlags range;
  curve->add_option("--rb", radii, "beam radius multiples")->delimiter(',')->required();
  curve->add_option("--out-dir", out_dir, "directory for curve_rb<r>.csv files");
  range.attach(curve);
  common.attach(curve);

  auto* sens = app.add_subcommand("sensitivity", "one-at-a-time parameter sweep");
  std::string param_name;
  std::vector<double> values;
  double anchor = 1.0;
  std::string sens_dir;
  sens->add_option("--param", param_name, "t_R|T_base|T_act|k|rhoCp|mu_inv|v_c_ratio")->required();
  sens->add_option("--values", values, "parameter values (SI; rhoCp in J/(m^3 K), mu_inv in m)")
      ->delimiter(',')
      ->required();
  sens->add_option("--rb", anchor, "physical beam radius as a multiple of the reference r_s");
  sens->add_option("--out-dir", sens_dir, "output directory")->required();
  range.attach(sens);
  common.attach(sens);

  auto* validate = app.add_subcommand("validate", "finite-difference and quadrature cross-checks");
  ValidationOptions vopts;
  validate->add_flag("--coarse", vopts.coarse, "use an under-resolved FD grid (must fail)");
  validate->add_flag("--quadrature-only", vopts.quadrature_only, "skip the FD checks");
  validate->add_option("--seed", vopts.seed, "seed for the randomized cases");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("thermaldose");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (validate->parsed()) return cmd_validate(vopts, out);
    const RunConfig cfg = common.resolve();
    if (single->parsed()) return cmd_single(cfg, t_F, r_b, trace_out, trace_points, out);
    if (trace->parsed()) return cmd_trace(cfg, t_F, r_b, trace_path, trace_points, out);
    if (curve->parsed()) return cmd_curve(cfg, radii, range, out_dir, out);
    if (sens->parsed()) return cmd_sensitivity(cfg, param_name, values, anchor, range, sens_dir, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const fs::filesystem_error& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitBadConfig;
  }
  return kExitBadConfig;
}

}  // namespace thermaldose::cli
