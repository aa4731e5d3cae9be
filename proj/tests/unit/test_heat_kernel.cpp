#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "thermaldose/heat_kernel.hpp"
#include "thermaldose/quadrature.hpp"

using namespace thermaldose;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("kernel_u at frozen 40-digit values") {
  struct Row {
    double z, t, want;
  };
  const Row rows[] = {
      {1.7, 0.3, 0.06344452828195225308}, {0.5, 2.0, 0.8673053829580811043},
      {3.0, 10.0, 1.431256295616193650},  {10.0, 100.0, 4.036608743136870149},
      {2.0, 0.01, 0.001360142208911166003}, {20.0, 400.0, 8.007604975149444205},
  };
  for (const auto& r : rows) {
    CAPTURE(r.z);
    CAPTURE(r.t);
    CHECK(rel(kernel_u(r.z, r.t), r.want) <= 1e-12);
  }
}

TEST_CASE("kernel_u agrees with the textbook form across the plane") {
  double worst = 0.0;
  for (double t : {1e-4, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 50.0, 300.0}) {
    for (double z : {0.0, 0.01, 0.3, 1.0, 2.5, 5.0, 8.0, 15.0}) {
      const double want = oracle::kernel_u(z, t);
      if (want < 1e-200) continue;
      worst = std::fmax(worst, rel(kernel_u(z, t), want));
    }
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("surface value U(0,1)") {
  CHECK(rel(kernel_u(0.0, 1.0), 0.5559627432513195783) <= 1e-14);
  CHECK(rel(kernel_h(1.0), 0.5559627432513195783) <= 1e-14);
}

TEST_CASE("deep, early-time limit U ~ t exp(-z)") {
  // heat from the source term dominates before conduction reaches z
  const double u = kernel_u(5.0, 1e-6);
  CHECK(rel(u, 6.737950368060089631e-9) <= 1e-10);
  CHECK(rel(u, 1e-6 * std::exp(-5.0)) <= 1e-5);
}

TEST_CASE("kernel_u vanishes for t <= 0") {
  CHECK(kernel_u(0.0, 0.0) == 0.0);
  CHECK(kernel_u(1.0, -3.0) == 0.0);
  CHECK(kernel_h(0.0) == 0.0);
  CHECK(kernel_h(-1.0) == 0.0);
}

TEST_CASE("h(s) matches its defining expression and the oracle") {
  CHECK(rel(kernel_h(100.0), 10.33993266369894832) <= 1e-13);
  CHECK(rel(kernel_h(1e6), 1127.379731284814027) <= 1e-13);
  double worst = 0.0;
  for (double s = 1e-6; s < 500.0; s *= 1.37) {
    worst = std::fmax(worst, std::fabs(kernel_h(s) - kernel_u(0.0, s)) / kernel_h(s));
    worst = std::fmax(worst, rel(kernel_h(s), oracle::kernel_h(s)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("h is positive and increasing; small-s series s - 4 s^1.5 / (3 sqrt pi) + s^2 / 2") {
  double prev = 0.0;
  for (double s = 1e-8; s < 1e4; s *= 1.1) {
    const double v = kernel_h(s);
    CHECK(v > prev);
    prev = v;
  }
  const double s = 1e-6;
  const double approx = s - 4.0 * std::pow(s, 1.5) / (3.0 * std::sqrt(std::numbers::pi)) + 0.5 * s * s;
  CHECK(rel(kernel_h(s), approx) <= 1e-8);
}

TEST_CASE("kernel_u is increasing in t and decreasing in z") {
  for (double z : {0.0, 0.5, 2.0, 6.0}) {
    double prev = 0.0;
    for (double t = 0.01; t < 100.0; t *= 1.3) {
      const double v = kernel_u(z, t);
      CHECK(v > prev);
      prev = v;
    }
  }
  for (double t : {0.05, 1.0, 20.0}) {
    double prev = kernel_u(0.0, t);
    for (double z = 0.05; z < 12.0; z += 0.05) {
      const double v = kernel_u(z, t);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("kernel_u satisfies the PDE by finite differences") {
  for (double t : {0.3, 1.0, 4.0}) {
    for (double z : {0.4, 1.0, 3.0}) {
      const double ht = 1e-4, hz = 1e-3;
      const double u_t = (kernel_u(z, t + ht) - kernel_u(z, t - ht)) / (2 * ht);
      const double u_zz =
          (kernel_u(z + hz, t) - 2 * kernel_u(z, t) + kernel_u(z - hz, t)) / (hz * hz);
      CAPTURE(z);
      CAPTURE(t);
      CHECK(std::fabs(u_t - u_zz - std::exp(-z)) <= 1e-5);
    }
  }
}

TEST_CASE("zero surface flux") {
  for (double t : {0.1, 1.0, 10.0}) {
    const double h = 1e-4;
    const double du = (-3 * kernel_u(0, t) + 4 * kernel_u(h, t) - kernel_u(2 * h, t)) / (2 * h);
    CHECK(std::fabs(du) <= 1e-7);
  }
}

TEST_CASE("absorbed energy: integral of U over depth equals t") {
  for (double t : {0.5, 2.0, 10.0}) {
    const auto r = integrate_adaptive([t](double z) { return kernel_u(z, t); }, 0.0,
                                      40.0 + 20.0 * std::sqrt(t), 1e-12);
    CAPTURE(t);
    CHECK(rel(r.value, t) <= 1e-6);
  }
}

TEST_CASE("surface trace superposes the power-off kernel") {
  const double p = 2.0, t_f = 1.5;
  CHECK(surface_trace(p, t_f, 1.0) == doctest::Approx(p * kernel_h(1.0)).epsilon(1e-15));
  CHECK(surface_trace(p, t_f, 3.0) ==
        doctest::Approx(p * (kernel_h(3.0) - kernel_h(1.5))).epsilon(1e-15));
  // surface temperature peaks at power-off
  CHECK(surface_trace(p, t_f, t_f) > surface_trace(p, t_f, t_f * 0.999));
  CHECK(surface_trace(p, t_f, t_f) > surface_trace(p, t_f, t_f * 1.001));
}

TEST_CASE("temp_field_nd: Gaussian lateral factor and depth monotonicity") {
  const double p = 3.0, rb = 1.2;
  CHECK(temp_field_nd(p, rb, 0.0, 0.5, 2.0) == doctest::Approx(p * kernel_u(0.5, 2.0)));
  CHECK(temp_field_nd(p, rb, rb, 0.5, 2.0) ==
        doctest::Approx(p * std::exp(-2.0) * kernel_u(0.5, 2.0)));
  CHECK(temp_field_nd(p, rb, 0.0, 0.5, 2.0, 1.0) ==
        doctest::Approx(p * (kernel_u(0.5, 2.0) - kernel_u(0.5, 1.0))));
  double prev = temp_field_nd(p, rb, 0.3, 0.0, 1.0);
  for (double z = 0.1; z < 8.0; z += 0.1) {
    const double v = temp_field_nd(p, rb, 0.3, z, 1.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("to_physical maps 0 and 1 to T_base and T_act") {
  const auto params = default_params();
  CHECK(to_physical(0.0, params) == doctest::Approx(32.0));
  CHECK(to_physical(1.0, params) == doctest::Approx(40.4));
  CHECK(to_physical(3.3333333333333335, params) == doctest::Approx(60.0));
}

TEST_CASE("sample_surface_trace") {
  const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
  const auto trace = sample_surface_trace(2.0, 1.0, times);
  REQUIRE(trace.t_nd.size() == 4);
  CHECK(trace.t_nd[0] == 0.0);
  CHECK(trace.t_nd[3] == doctest::Approx(surface_trace(2.0, 1.0, 2.0)));
  const std::vector<double> bad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(sample_surface_trace(2.0, 1.0, bad), std::invalid_argument);
}
