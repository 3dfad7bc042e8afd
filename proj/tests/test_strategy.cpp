#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "raysearch/geometry.hpp"
#include "raysearch/simulator.hpp"
#include "raysearch/strategy.hpp"

using namespace raysearch;

namespace {
constexpr double kPiHalf = std::numbers::pi / 2;
const StrategyParams kStar{1.978624821, 0.166547577};
}  // namespace

TEST_CASE("axis heights") {
  CHECK(axis_height({2.0, 0.0}, 5) == 0.0);
  CHECK(axis_height({2.0, std::numbers::pi / 4}, 1) == doctest::Approx(2.0).epsilon(1e-15));
  const double r = kStar.r, a = kStar.alpha;
  const double want = 2.0 * std::tan(a) * (r * r * r - 1.0) / (r - 1.0);
  CHECK(axis_height(kStar, 3) == doctest::Approx(want).epsilon(1e-15));
  CHECK(axis_height(kStar, 0) == 0.0);
}

TEST_CASE("turning points alternate and follow the closed form") {
  CHECK(turning_point({2.0, 0.0}, 1).x == doctest::Approx(1.0));
  CHECK(turning_point({2.0, 0.0}, 1).y == doctest::Approx(0.0));
  CHECK(turning_point({2.0, 0.0}, 4).x == doctest::Approx(-8.0));

  const double r = kStar.r, a = kStar.alpha;
  const Point p1 = turning_point(kStar, 2);
  CHECK(p1.x == doctest::Approx(-r).epsilon(1e-15));
  CHECK(p1.y ==
        doctest::Approx(2.0 * std::tan(a) * ((r * r - 1.0) / (r - 1.0) - r / 2.0))
            .epsilon(1e-15));

  for (int i = 1; i <= 20; ++i) {
    const Point p = turning_point(kStar, i);
    CHECK(std::abs(p.x) == doctest::Approx(std::pow(r, i - 1)).epsilon(1e-14));
    CHECK((p.x > 0) == (i % 2 == 1));
    // Height relation to the next axis visit.
    CHECK(p.y == doctest::Approx(axis_height(kStar, i) -
                                 std::tan(a) * std::pow(r, i - 1))
                     .epsilon(1e-12));
  }
}

TEST_CASE("path legs all climb at the strategy slope") {
  const SearchPath path = build_path(kStar, 18);
  const double slope = std::tan(kStar.alpha);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Point d = path.vertices[i + 1] - path.vertices[i];
    CHECK(std::abs(std::abs(d.y / d.x) - slope) < 1e-12);
  }
}

TEST_CASE("classic arc lengths and the general prefix-length formula") {
  const SearchPath classic = build_path({2.0, 0.0}, 8);
  // Forth-and-back pairs contribute 2 r^j each; check the prefix at p_2.
  // Vertices: s, p0, h1, p1, h2, p2 -> arc 2*1 + 2*2 + 4 at index 5.
  CHECK(classic.cum_len[5] == doctest::Approx(2.0 + 4.0 + 4.0).epsilon(1e-15));

  const SearchPath path = build_path(kStar, 16);
  const double r = kStar.r, ca = std::cos(kStar.alpha);
  for (int k = 1; k <= 16; ++k) {
    double sum = 0.0;
    for (int j = 0; j <= k - 2; ++j) sum += std::pow(r, j);
    const double want = (2.0 * sum + std::pow(r, k - 1)) / ca;
    CHECK(path.cum_len[2 * k - 1] == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("axis crossings sit at the analytic heights") {
  const SearchPath path = build_path(kStar, 16);
  for (int k = 1; k <= 15; ++k) {
    const Point v = path.vertices[2 * k];  // crossing between turns k and k+1
    CHECK(v.x == 0.0);
    CHECK(v.y == doctest::Approx(axis_height(kStar, k)).epsilon(1e-13));
  }
}

TEST_CASE("analytic detection length at the beta extremes") {
  const double r = 2.0;
  for (int k : {2, 4, 6}) {
    // beta = pi/2: out, turn, and back past the missed turn.
    double sum = 0.0;
    for (int j = 0; j < k; ++j) sum += 2.0 * std::pow(r, j);
    const double want = sum + std::pow(r, k) + std::pow(r, k) + std::pow(r, k - 1);
    CHECK(analytic_detection_length({2.0, 0.0}, k, kPiHalf) ==
          doctest::Approx(want).epsilon(1e-15));
  }
  // beta = alpha: detection exactly at the next turn.
  const double a = kStar.alpha;
  for (int k : {3, 7}) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) sum += std::pow(kStar.r, j);
    const double want = (2.0 * sum + std::pow(kStar.r, k)) / std::cos(a);
    CHECK(analytic_detection_length(kStar, k, a) == doctest::Approx(want).epsilon(1e-14));
  }
  CHECK_THROWS_AS(analytic_detection_length(kStar, 3, kStar.alpha - 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_detection_length(kStar, 3, kPiHalf + 0.01),
                  std::invalid_argument);
}

TEST_CASE("analytic detection length agrees with the geometric simulator") {
  const SearchPath path = build_path(kStar, 18);
  double worst = 0.0;
  for (int i = 2; i <= 15; ++i) {
    for (int k = 0; k < 100; ++k) {
      const double beta = kStar.alpha + (kPiHalf - kStar.alpha) * k / 99;
      const RaySpec ray = tangent_ray_at_turn(kStar, i, beta);
      const auto hit = first_hit(path, ray, true);
      REQUIRE(hit.has_value());
      const double want = analytic_detection_length(kStar, i, beta);
      worst = std::max(worst, std::abs(hit->arc_length - want));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(build_path(kStar, 0), std::invalid_argument);
  CHECK_THROWS_AS(turning_point(kStar, 0), std::invalid_argument);
  CHECK_THROWS_AS(axis_height(kStar, -1), std::invalid_argument);
  CHECK_THROWS_AS((StrategyParams{0.8, 0.1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((StrategyParams{2.0, -0.1}).validate(), std::invalid_argument);
}
