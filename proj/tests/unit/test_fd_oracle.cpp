#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "thermaldose/errors.hpp"
#include "thermaldose/fd_oracle.hpp"
#include "thermaldose/heat_kernel.hpp"

using namespace thermaldose;

TEST_CASE("moderate grid tracks the closed form") {
  FdConfig cfg;
  cfg.nz = 601;
  cfg.dt = 0.01;
  cfg.t_end = 3.0;
  const auto rep = compare_with_closed_form(cfg);
  CHECK(rep.max_abs_error <= 1e-3);
}

TEST_CASE("power-off superposition") {
  FdConfig cfg;
  cfg.nz = 601;
  cfg.dt = 0.01;
  cfg.t_end = 4.0;
  cfg.t_off = 1.5;
  CHECK(max_error_vs_closed_form(cfg) <= 1e-3);
}

TEST_CASE("second-order convergence") {
  FdConfig coarse;
  coarse.nz = 151;
  coarse.dt = 0.04;
  coarse.t_end = 2.0;
  FdConfig fine = coarse;
  fine.nz = 301;
  fine.dt = 0.02;
  const double ratio = max_error_vs_closed_form(coarse) / max_error_vs_closed_form(fine);
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("discrete maximum principle after power-off") {
  FdConfig cfg;
  cfg.nz = 301;
  cfg.dt = 0.02;
  cfg.t_end = 4.0;
  cfg.t_off = 1.0;
  cfg.sample_every = 1;
  const auto f = solve_fd(cfg);
  double prev = INFINITY;
  for (std::size_t ti = 0; ti < f.times.size(); ++ti) {
    if (f.times[ti] <= 1.0 + 1e-12) continue;
    double mx = 0.0;
    for (std::size_t zi = 0; zi < f.z.size(); ++zi) mx = std::max(mx, f.at(ti, zi));
    CHECK(mx <= prev + 1e-14);
    prev = mx;
  }
}

TEST_CASE("far boundary is irrelevant") {
  FdConfig a;
  a.nz = 301;
  a.dt = 0.02;
  a.t_end = 5.0;
  FdConfig b = a;
  b.depth_L = 60.0;
  b.nz = 601;
  const auto fa = solve_fd(a);
  const auto fb = solve_fd(b);
  CHECK(std::fabs(fa.at(fa.times.size() - 1, 0) - fb.at(fb.times.size() - 1, 0)) < 1e-6);
}

TEST_CASE("unusable configurations are rejected") {
  FdConfig cfg;
  cfg.nz = 2;
  CHECK_THROWS_AS(solve_fd(cfg), UnstableConfig);
  cfg = {};
  cfg.dt = 0.0;
  CHECK_THROWS_AS(solve_fd(cfg), UnstableConfig);
  cfg = {};
  cfg.depth_L = 5.0;
  CHECK_THROWS_AS(solve_fd(cfg), UnstableConfig);
  cfg = {};
  cfg.t_off = 1.0025;
  CHECK_THROWS_AS(solve_fd(cfg), UnstableConfig);
  cfg = {};
  cfg.dt = 0.3;
  CHECK_THROWS_AS(solve_fd(cfg), UnstableConfig);
}
