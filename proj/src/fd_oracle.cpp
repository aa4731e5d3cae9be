#include "thermaldose/fd_oracle.hpp"

#include <cmath>
#include <string>

#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"

namespace thermaldose {
namespace {

// Constant tridiagonal system (I - theta dt L) pre-factored for the Thomas sweep.
class TridiagonalSolver {
 public:
  TridiagonalSolver(std::size_t n, double diag, double off, double first_upper)
      : c_prime_(n), inv_denom_(n), off_(off) {
    double prev_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lower = i == 0 ? 0.0 : off;
      const double upper = i == 0 ? first_upper : (i + 1 < n ? off : 0.0);
      const double denom = diag - lower * prev_c;
      inv_denom_[i] = 1.0 / denom;
      c_prime_[i] = upper * inv_denom_[i];
      prev_c = c_prime_[i];
    }
  }

  void solve(std::vector<double>& rhs) const {
    const std::size_t n = rhs.size();
    rhs[0] *= inv_denom_[0];
    for (std::size_t i = 1; i < n; ++i) rhs[i] = (rhs[i] - off_ * rhs[i - 1]) * inv_denom_[i];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c_prime_[i] * rhs[i + 1];
  }

 private:
  std::vector<double> c_prime_;
  std::vector<double> inv_denom_;
  double off_;
};

void validate(const FdConfig& c) {
  if (c.nz < 3) throw UnstableConfig("need at least 3 depth nodes");
  if (!(c.dt > 0.0) || !(c.t_end > 0.0)) throw UnstableConfig("dt and t_end must be positive");
  if (!(c.depth_L >= 20.0)) {
    throw UnstableConfig("depth_L must be at least 20 so the source is negligible at z = L");
  }
  if (c.sample_every <= 0) throw UnstableConfig("sample_every must be positive");
  const double steps = c.t_end / c.dt;
  if (std::fabs(steps - std::round(steps)) > 1e-6 * steps) {
    throw UnstableConfig("t_end must be a whole number of steps");
  }
  if (c.t_off) {
    const double k = *c.t_off / c.dt;
    if (!(*c.t_off > 0.0) || std::fabs(k - std::round(k)) > 1e-6 * std::max(1.0, k)) {
      throw UnstableConfig("t_off must be a positive whole number of steps");
    }
  }
}

}  // namespace

FdField solve_fd(const FdConfig& config) {
  validate(config);
  const std::size_t nodes = static_cast<std::size_t>(config.nz);
  const std::size_t unknowns = nodes - 1;  // U(L) = 0
  const double dz = config.depth_L / static_cast<double>(nodes - 1);
  const double dt = config.dt;
  const long steps = std::lround(config.t_end / dt);
  const long off_step = config.t_off ? std::lround(*config.t_off / dt) : -1;

  FdField field;
  field.z.resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i) field.z[i] = dz * static_cast<double>(i);

  std::vector<double> source(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) source[i] = std::exp(-field.z[i]);

  // L u at node i: (u[i-1] - 2u[i] + u[i+1]) / dz^2, with u[-1] = u[1].
  const double inv_dz2 = 1.0 / (dz * dz);
  const auto make_solver = [&](double theta_dt) {
    const double r = theta_dt * inv_dz2;
    return TridiagonalSolver(unknowns, 1.0 + 2.0 * r, -r, -2.0 * r);
  };
  // Crank-Nicolson with dt and backward Euler with dt/2 share I - (dt/2) L.
  const TridiagonalSolver implicit = make_solver(0.5 * dt);

  std::vector<double> u(unknowns, 0.0);
  std::vector<double> rhs(unknowns);
  const auto apply_laplacian = [&](const std::vector<double>& v, std::size_t i) {
    const double left = i == 0 ? v[1] : v[i - 1];
    const double right = i + 1 < unknowns ? v[i + 1] : 0.0;
    return (left - 2.0 * v[i] + right) * inv_dz2;
  };

  const auto store = [&](double t) {
    field.times.push_back(t);
    field.values.insert(field.values.end(), u.begin(), u.end());
    field.values.push_back(0.0);
  };
  store(0.0);

  for (long n = 0; n < steps; ++n) {
    const bool power_on = off_step < 0 || n < off_step;
    const double s = power_on ? 1.0 : 0.0;
    const bool smoothing_step = n == 0 || n == off_step;
    if (smoothing_step) {
      // two backward-Euler half steps
      for (int half = 0; half < 2; ++half) {
        for (std::size_t i = 0; i < unknowns; ++i) rhs[i] = u[i] + 0.5 * dt * s * source[i];
        implicit.solve(rhs);
        u.swap(rhs);
      }
    } else {
      for (std::size_t i = 0; i < unknowns; ++i) {
        rhs[i] = u[i] + 0.5 * dt * apply_laplacian(u, i) + dt * s * source[i];
      }
      implicit.solve(rhs);
      u.swap(rhs);
    }
    if ((n + 1) % config.sample_every == 0 || n + 1 == steps) {
      store(static_cast<double>(n + 1) * dt);
    }
  }
  return field;
}

FdErrorReport compare_with_closed_form(const FdConfig& config, double z_max) {
  const FdField field = solve_fd(config);
  FdErrorReport report;
  for (std::size_t ti = 0; ti < field.times.size(); ++ti) {
    const double t = field.times[ti];
    for (std::size_t zi = 0; zi < field.z.size() && field.z[zi] <= z_max + 1e-12; ++zi) {
      const double z = field.z[zi];
      double exact = kernel_u(z, t);
      if (config.t_off) exact -= kernel_u(z, t - *config.t_off);
      const double err = std::fabs(field.at(ti, zi) - exact);
      if (err > report.max_abs_error) {
        report.max_abs_error = err;
        report.z_at_max = z;
        report.t_at_max = t;
      }
    }
  }
  return report;
}

}  // namespace thermaldose
