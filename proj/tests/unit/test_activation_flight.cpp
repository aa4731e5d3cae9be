#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "thermaldose/activation_flight.hpp"
#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"

using namespace thermaldose;

TEST_CASE("activated depth solves P U(z*, t) = 1") {
  const double p = 3.0, t = 2.0;
  const double z = activated_depth(p, t);
  CHECK(z > 0.0);
  CHECK(std::fabs(p * kernel_u(z, t) - 1.0) <= 1e-9);
  CHECK(activated_depth(0.5, 1.0) == 0.0);  // surface below threshold
  CHECK(activated_depth(3.0, 0.0) == 0.0);
}

TEST_CASE("activated depth grows with time and power") {
  double prev = 0.0;
  for (double t = 0.5; t < 20.0; t *= 1.5) {
    const double z = activated_depth(4.0, t);
    CHECK(z > prev);
    prev = z;
  }
  CHECK(activated_depth(6.0, 1.0) > activated_depth(4.0, 1.0));
}

TEST_CASE("activated volume: closed-form lateral reduction against quadrant cell counting") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> p_dist(1.5, 6.0), r_dist(0.5, 3.0), t_dist(0.3, 4.0);
  for (int i = 0; i < 3; ++i) {
    const double p = p_dist(rng), r = r_dist(rng), t = t_dist(rng);
    if (p * kernel_h(t) <= 1.2) continue;
    const double analytic = activated_volume_nd(p, r, t);
    const double counted = oracle::brute_force_volume(p, r, t, 400);
    CAPTURE(p);
    CAPTURE(r);
    CAPTURE(t);
    CHECK(std::fabs(analytic - counted) / analytic <= 2e-3);
  }
}

TEST_CASE("activated volume is monotone and scales with r_bn^2") {
  CHECK(activated_volume_nd(0.5, 1.0, 1.0) == 0.0);
  const double v1 = activated_volume_nd(3.0, 1.0, 2.0);
  CHECK(activated_volume_nd(3.0, 2.0, 2.0) == doctest::Approx(4.0 * v1).epsilon(1e-12));
  double prev = 0.0;
  for (double t = 0.2; t < 10.0; t *= 1.3) {
    const double v = activated_volume_nd(3.0, 1.0, t);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(activated_volume_nd(3.5, 1.0, 2.0) > v1);
}

TEST_CASE("flight initiation: volume reaches pi exactly once") {
  for (double r : {0.5, 1.0, 5.0, 20.0}) {
    const double p = 4.0;
    const double t_c = flight_initiation_time(p, r);
    CAPTURE(r);
    CHECK(activated_volume_nd(p, r, t_c) == doctest::Approx(kVolumeThresholdNd).epsilon(1e-8));
    CHECK(activated_volume_nd(p, r, t_c * 0.999) < kVolumeThresholdNd);
  }
}

TEST_CASE("initiation time decreases in power on a log grid") {
  for (double r : {0.5, 1.0, 5.0}) {
    double prev = INFINITY;
    for (int i = 0; i < 20; ++i) {
      const double p = 1.2 * std::pow(10.0, i * 0.1);
      const double t_c = flight_initiation_time(p, r);
      CHECK(t_c < prev);
      prev = t_c;
    }
  }
  CHECK(flight_initiation_time(8.0, 1.0) < flight_initiation_time(4.0, 1.0));
}

TEST_CASE("power inversion round trip") {
  const double t_rn = 1.2979997386499403;
  for (double r : {0.5, 1.0, 5.0, 20.0}) {
    for (double t_fn : {1.9, 3.0, 10.0, 60.0, 400.0}) {
      const double p = invert_power(t_fn, r, t_rn);
      const double t_c = flight_initiation_time(p, r);
      CAPTURE(r);
      CAPTURE(t_fn);
      CHECK(std::fabs(t_c + t_rn - t_fn) <= 1e-7 * t_fn);
    }
  }
}

TEST_CASE("solve_flight resolves both beam forms consistently") {
  const auto scales = normalize(default_params());
  const FlightSolution by_time = solve_flight({1.0, FlightActionSeconds{1.0}}, scales);
  CHECK(by_time.t_fn == doctest::Approx(1.0 / scales.t_s));
  CHECK(by_time.t_cn == doctest::Approx(by_time.t_fn - scales.t_Rn));
  const FlightSolution by_power = solve_flight({1.0, CenterPowerNd{by_time.p_nd}}, scales);
  CHECK(by_power.t_cn == doctest::Approx(by_time.t_cn).epsilon(1e-9));
  CHECK(by_power.t_fn == doctest::Approx(by_time.t_fn).epsilon(1e-9));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(flight_initiation_time(0.0, 1.0), NonPositivePower);
  CHECK_THROWS_AS(flight_initiation_time(-1.0, 1.0), NonPositivePower);
  CHECK_THROWS_AS(invert_power(1.0, 1.0, 1.298), FlightTimeTooSmall);
  CHECK_THROWS_AS(invert_power(1.298, 1.0, 1.298), FlightTimeTooSmall);
  // FlightTimeTooSmall is reported as infeasible physics, not bad config
  CHECK_THROWS_AS(invert_power(1.0, 1.0, 1.298), InfeasibleError);
}
