#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "raysearch/geometry.hpp"
#include "raysearch/scalar_opt.hpp"
#include "raysearch/strategy.hpp"

using namespace raysearch;

namespace {
constexpr double kPiHalf = std::numbers::pi / 2;

// Independent oracle: minimum distance from the origin to densely sampled
// points of the ray, refined by golden section over the ray parameter.
double brute_force_perp(const RaySpec& ray) {
  const Point src = ray.source();
  const Point dir = ray.direction();
  const double reach = 4.0 * (norm(src) + norm(ray.anchor) + 1.0);
  auto dist_at = [&](double t) { return norm(src + t * dir); };
  double best_t = 0.0;
  double best = dist_at(0.0);
  const int n = 20000;
  for (int k = 1; k <= n; ++k) {
    const double t = reach * k / n;
    const double d = dist_at(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  auto [t, v] = golden_min<double>(dist_at, std::max(0.0, best_t - reach / n),
                                   best_t + reach / n, 1e-13);
  return std::min(best, v);
}

RaySpec random_ray(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  RaySpec ray;
  ray.side = (rng() & 1) ? Side::Right : Side::Left;
  ray.beta = 0.05 + (kPiHalf - 0.05) * u01(rng);
  const double x = std::pow(10.0, 2.0 * u01(rng));
  ray.anchor = {ray.side == Side::Right ? x : -x, 0.0};
  if (u01(rng) < 0.5) {
    // Move the anchor off the baseline along the ray; same supporting line.
    ray.anchor = ray.anchor + (u01(rng) * x) * ray.direction();
  }
  return ray;
}

SearchPath random_zigzag(std::mt19937_64& rng, int turns) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double r = 1.5 + u01(rng);
  const double alpha = 0.5 * u01(rng);
  return build_path({r, alpha}, turns);
}
}  // namespace

TEST_CASE("perpendicular distance to vertical ray is the x offset") {
  for (double d : {0.5, 1.0, 7.25, 1234.0}) {
    RaySpec ray{Side::Right, kPiHalf, {d, 0.0}};
    CHECK(perp_distance_to_ray(ray) == doctest::Approx(d).epsilon(1e-15));
  }
}

TEST_CASE("flat strategy tangent ray has distance sin(beta) r^(i-1)") {
  const StrategyParams flat{2.0, 0.0};
  for (int i : {1, 3, 5, 9}) {
    for (double beta : {0.3, 0.8, 1.2}) {
      RaySpec ray{Side::Right, beta, turning_point(flat, i)};
      const double want = std::sin(beta) * std::pow(2.0, i - 1);
      CHECK(perp_distance_to_ray(ray) == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("tangent distance at a turning point matches the intercept form") {
  const StrategyParams p{1.978624821, 0.166547577};
  const int i = 10;
  const double beta = 0.190681180073897;
  // Turn 10 lies on the left; the right-side mirror carries the same
  // distance and matches the intercept form directly.
  const Point anchor = mirror(turning_point(p, i));
  RaySpec ray{Side::Right, beta, anchor};
  // Intercept of the supporting line, then distance = cos(beta) * b.
  const double r = p.r;
  const double b = std::tan(beta) * std::pow(r, i - 1) +
                   2.0 * std::tan(p.alpha) *
                       ((std::pow(r, i) - 1.0) / (r - 1.0) - 0.5 * std::pow(r, i - 1));
  CHECK(perp_distance_to_ray(ray) ==
        doctest::Approx(std::cos(beta) * b).epsilon(1e-13));
}

TEST_CASE("perpendicular distance equals the brute-force minimum") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 30; ++k) {
    const RaySpec ray = random_ray(rng);
    const double got = perp_distance_to_ray(ray);
    const double want = brute_force_perp(ray);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("invalid rays are rejected") {
  RaySpec away{Side::Right, 0.4, {-3.0, 0.0}};  // right-side ray anchored left
  CHECK_THROWS_AS(perp_distance_to_ray(away), std::invalid_argument);
  RaySpec flat{Side::Right, 0.0, {1.0, 0.0}};
  CHECK_THROWS_AS(perp_distance_to_ray(flat), std::invalid_argument);
}

TEST_CASE("first hit on a straight baseline segment") {
  SearchPath path = SearchPath::from_vertices({{0.0, 0.0}, {2.0, 0.0}});
  RaySpec ray{Side::Right, kPiHalf, {1.0, 0.0}};
  const auto hit = first_hit(path, ray, false);
  REQUIRE(hit.has_value());
  CHECK(hit->point.x == doctest::Approx(1.0));
  CHECK(hit->point.y == doctest::Approx(0.0));
  CHECK(hit->arc_length == doctest::Approx(1.0));
  CHECK(hit->kind == HitKind::Crossing);
}

TEST_CASE("ray above a short prefix gives no hit") {
  SearchPath path = SearchPath::from_vertices({{0.0, 0.0}, {0.5, 0.0}});
  RaySpec ray{Side::Right, kPiHalf, {3.0, 0.0}};
  CHECK_FALSE(first_hit(path, ray, false).has_value());
  CHECK_FALSE(first_hit(path, ray, true).has_value());
}

TEST_CASE("tangent ray at a turning point: skipped corner, hit on return") {
  const StrategyParams p{1.978624821, 0.166547577};
  const int i = 6;
  const double beta = 0.35;
  const SearchPath path = build_path(p, 12);
  const RaySpec ray{Side::Left, beta, turning_point(p, i)};  // i = 6 turns left

  const auto touched = first_hit(path, ray, false);
  REQUIRE(touched.has_value());
  CHECK(touched->kind == HitKind::Tangential);
  CHECK(touched->point.x == doctest::Approx(turning_point(p, i).x).epsilon(1e-12));

  const auto crossed = first_hit(path, ray, true);
  REQUIRE(crossed.has_value());
  CHECK(crossed->kind == HitKind::Crossing);
  CHECK(crossed->arc_length ==
        doctest::Approx(analytic_detection_length(p, i, beta)).epsilon(1e-12));
}

TEST_CASE("property: extending the path never moves an existing hit later") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const SearchPath full = random_zigzag(rng, 12);
    const RaySpec ray = random_ray(rng);
    for (std::size_t cut = 2; cut < full.size(); ++cut) {
      std::vector<Point> prefix(full.vertices.begin(), full.vertices.begin() + cut);
      const auto partial = first_hit(SearchPath::from_vertices(prefix), ray, true);
      if (!partial) continue;
      const auto whole = first_hit(full, ray, true);
      REQUIRE(whole.has_value());
      CHECK(whole->arc_length <= partial->arc_length + 1e-9);
    }
  }
}

TEST_CASE("property: mirroring preserves hit arc lengths exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const SearchPath path = random_zigzag(rng, 10);
    const RaySpec ray = random_ray(rng);
    const auto hit = first_hit(path, ray, true);
    const auto mirrored = first_hit(mirror(path), mirror(ray), true);
    REQUIRE(hit.has_value() == mirrored.has_value());
    if (hit) {
      CHECK(hit->arc_length == mirrored->arc_length);
      CHECK(perp_distance_to_ray(ray) == perp_distance_to_ray(mirror(ray)));
    }
  }
}

TEST_CASE("path validation rejects descending or duplicate vertices") {
  CHECK_THROWS_AS(SearchPath::from_vertices({{0, 0}, {1, 1}, {2, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SearchPath::from_vertices({{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SearchPath::from_vertices({{0, 0}, {1, -2}}), std::invalid_argument);
}
