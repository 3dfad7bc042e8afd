#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "raysearch/geometry.hpp"
#include "raysearch/lowerbound.hpp"

using namespace raysearch;

TEST_CASE("triangle construction") {
  CHECK(triangle_bound(1.0) == doctest::Approx(std::sqrt(82.0)).epsilon(1e-15));
  CHECK(triangle_bound(0.5) == doctest::Approx(std::sqrt(81.25) / 0.5).epsilon(1e-15));
  // Above d_y = 1 the vertical-ray ratio dominates.
  CHECK(triangle_bound(2.0) == doctest::Approx(std::sqrt(85.0)).epsilon(1e-15));
  CHECK_THROWS_AS(triangle_bound(0.0), std::invalid_argument);
}

TEST_CASE("circle-avoiding construction") {
  CHECK(circle_bound(1.0) == doctest::Approx(9.063577796336).epsilon(1e-12));
  CHECK(circle_bound(0.5) > circle_bound(1.0));
  CHECK(circle_bound(1e-6) > 1e6);  // the 1/d_y term blows up
  CHECK_THROWS_AS(circle_bound(0.0), std::invalid_argument);
  CHECK_THROWS_AS(circle_bound(1.5), std::invalid_argument);
}

TEST_CASE("overall lower bound") {
  const double lb = lower_bound();
  CHECK(lb == doctest::Approx(9.063577796336).epsilon(1e-12));
  CHECK(lb >= std::sqrt(82.0));
  CHECK(lb - std::sqrt(82.0) > 0.008);  // the improvement is real
  CHECK(lb < 9.12725);                  // consistent with the upper bound
}

TEST_CASE("curve sampling is monotone decreasing") {
  const LowerBoundCurve curve = lower_bound_curve(512);
  REQUIRE(curve.samples.size() == 512);
  for (std::size_t i = 1; i < curve.samples.size(); ++i) {
    CHECK(curve.samples[i].second < curve.samples[i - 1].second);
  }
  CHECK(curve.samples.back().first == doctest::Approx(1.0));
}

TEST_CASE("geometric reconstruction of the circle bound") {
  // Tangent from the unfolded start, the arc, and the unit horizontal run
  // rebuild R(d_y) * d_y from plain geometry.
  const Point start{-8.0, 0.0};
  for (int k = 1; k <= 64; ++k) {
    const double dy = static_cast<double>(k) / 64;
    const double tangent = std::sqrt(dot(start, start) - dy * dy);
    const double arc = std::asin(dy / tangent) * dy;
    const double run = 1.0;
    CHECK(tangent + arc + run ==
          doctest::Approx(circle_bound(dy) * dy).epsilon(1e-12));
  }
}
