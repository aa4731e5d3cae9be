#include <doctest.h>

#include <cmath>

#include "thermaldose/damage_model.hpp"
#include "thermaldose/errors.hpp"
#include "thermaldose/heat_kernel.hpp"

using namespace thermaldose;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("Arrhenius coefficients for the listed parameters") {
  const auto c = damage_coefficients(default_params());
  CHECK(rel(c.c1, 1.868644444044944e94) <= 1e-12);
  CHECK(rel(c.c2, 4.207325207296849e-3) <= 1e-12);
  CHECK(rel(c.c3, 1.158169154228856e-4) <= 1e-12);
}

TEST_CASE("damage rate at baseline and at 60 C") {
  const auto scales = normalize(default_params());
  const auto& c = scales.coeffs;
  CHECK(rel(damage_rate(0.0, c), 1.117146810988537e-9) <= 1e-10);
  const double t_nd_60 = (60.0 - 32.0) / (40.4 - 32.0);
  CHECK(rel(damage_rate(t_nd_60, c) / scales.t_s, 2.49799) <= 1e-5);
}

TEST_CASE("damage rate is positive and increasing") {
  const auto c = damage_coefficients(default_params());
  double prev = 0.0;
  for (double t = -2.0; t < 8.0; t += 0.05) {
    const double k = damage_rate(t, c);
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("settlement time") {
  CHECK(rel(settlement_time(2.213, 4.719), 141.2181380083243) <= 1e-13);
  CHECK(settlement_time(2.0, 3.0, 0.25) > settlement_time(2.0, 3.0, 0.5));
  // the post-exposure trace has indeed fallen near c_stl there
  const double p = 2.213, t_f = 4.719;
  CHECK(std::fabs(surface_trace(p, t_f, settlement_time(p, t_f)) - 0.5) <= 0.01);
}

TEST_CASE("two-segment grid") {
  const double t_f = 4.0, t_stl = 90.0;
  const TimeGrid g = build_grids(t_f, t_stl, 8, 64);
  REQUIRE(g.nodes.size() == 8 + 64 + 1);
  CHECK(g.split == 8);
  CHECK(g.nodes.front() == 0.0);
  CHECK(g.t_fn() == t_f);
  CHECK(rel(g.t_stl(), t_stl) <= 1e-9);
  for (std::size_t j = 0; j < 8; ++j) CHECK(g.nodes[j + 1] - g.nodes[j] == doctest::Approx(0.5));
  for (std::size_t j = g.split + 1; j + 1 < g.nodes.size(); ++j) {
    CHECK(g.nodes[j + 1] - g.nodes[j] > g.nodes[j] - g.nodes[j - 1]);
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(build_grids(1.0, 10.0, 0, 4), InvalidGrid);
  CHECK_THROWS_AS(build_grids(1.0, 10.0, 4, -1), InvalidGrid);
  CHECK_THROWS_AS(build_grids(1.0, 1.0, 4, 4), InvalidGrid);
  CHECK_THROWS_AS(build_grids(0.0, 10.0, 4, 4), InvalidGrid);
  CHECK_NOTHROW(build_grids(1.0, 10.0, 4, 4));
  CHECK_THROWS_AS(build_grids(1.0, 0.5, 4, 4), ConfigError);
}

TEST_CASE("Simpson sum is exact on a cubic") {
  // constant rate: c1 exp(-1/c2) with c3 = 0
  const DamageCoefficients c{2.0, 1e300, 0.0};
  const auto d = damage_integral(1.5, 3.0, c, {16, 16, 0.5});
  CHECK(rel(d.omega, 2.0 * std::exp(-1e-300) * d.t_stl_n) <= 1e-13);
  CHECK(rel(d.on_phase, 2.0 * 3.0) <= 1e-13);
}

TEST_CASE("Simpson against adaptive reference") {
  const auto scales = normalize(default_params());
  for (double p : {1.8, 2.2, 3.0}) {
    for (double t_f : {2.0, 4.7, 15.0}) {
      const auto d = damage_integral(p, t_f, scales.coeffs);
      const double ref = damage_integral_reference(p, t_f, d.t_stl_n, scales.coeffs);
      CAPTURE(p);
      CAPTURE(t_f);
      CHECK(rel(d.omega, ref) <= 1e-5);
      CHECK(d.omega == doctest::Approx(d.on_phase + d.off_phase));
    }
  }
}

TEST_CASE("burn classification thresholds") {
  CHECK(classify_burn(0.0) == BurnClass::None);
  CHECK(classify_burn(0.5299999) == BurnClass::None);
  CHECK(classify_burn(0.53) == BurnClass::FirstDegree);
  CHECK(classify_burn(0.9999999) == BurnClass::FirstDegree);
  CHECK(classify_burn(1.0) == BurnClass::SecondDegree);
  CHECK(classify_burn(9999.0) == BurnClass::SecondDegree);
  CHECK(classify_burn(1e4) == BurnClass::ThirdDegree);
  CHECK(to_string(BurnClass::SecondDegree) == "second-degree");
  CHECK(to_string(BurnClass::None) == "none");
}
