#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "raysearch/errors.hpp"
#include "raysearch/ratio.hpp"
#include "raysearch/simulator.hpp"

using namespace raysearch;

namespace {
constexpr double kPiHalf = std::numbers::pi / 2;
const StrategyParams kStar{1.978624821, 0.166547577};
}  // namespace

TEST_CASE("classic strategy against a barely missed vertical ray") {
  const StrategyParams classic{2.0, 0.0};
  const SearchPath path = build_path(classic, 20);
  const int k = 10;  // right-side visit at x = 2^k
  const double x0 = std::pow(2.0, k) * (1.0 + 1e-9);
  const RaySpec ray{Side::Right, kPiHalf, {x0, 0.0}};
  const RatioReport rep = simulate(path, ray);
  // Missed at 2^k, detected on the next right sweep.
  long double want = 0.0L;
  for (int j = 0; j <= k + 1; ++j) want += 2.0L * std::pow(2.0L, j);
  want = (want + static_cast<long double>(x0)) / x0;
  CHECK(rep.ratio == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
  CHECK(std::abs(rep.ratio - 9.0) < 16.0 * std::pow(2.0, -k));
}

TEST_CASE("tangent rays converge to the asymptotic ratio") {
  const SearchPath path = build_path(kStar, 30);
  const double beta = 0.190681180073897;
  const double asym = ratio_asymptotic(kStar, beta);
  const RatioReport r20 = simulate(path, tangent_ray_at_turn(kStar, 20, beta));
  CHECK(std::abs(r20.ratio - asym) < 5e-6);
  const RatioReport r25 = simulate(path, tangent_ray_at_turn(kStar, 25, beta));
  CHECK(std::abs(r25.ratio - asym) < 1.5e-7);
}

TEST_CASE("rays along the climb direction decrease to the alpha boundary") {
  const SearchPath path = build_path(kStar, 26);
  const double bound = ratio_boundary_alpha(kStar);
  double prev = 1e9;
  for (int i = 3; i <= 20; ++i) {
    // Anchor in the middle of the leg that leaves turning point i.
    const Point turn = turning_point(kStar, i);
    const Point crossing{0.0, axis_height(kStar, i)};
    const Point mid = 0.5 * (turn + crossing);
    const RaySpec ray{i % 2 == 1 ? Side::Right : Side::Left, kStar.alpha, mid};
    const RatioReport rep = simulate(path, ray);
    // Early legs carry the finite-horizon excess; the family decreases
    // toward the boundary value and never threatens the global bound.
    CHECK(rep.ratio < prev);
    CHECK(rep.ratio <= 9.1273);
    CHECK(rep.ratio >= bound - 1e-9);
    prev = rep.ratio;
  }
  CHECK(prev <= bound + 2e-5);
}

TEST_CASE("missed rays raise NoDetection") {
  const SearchPath path = build_path(kStar, 4);
  const RaySpec far{Side::Right, kPiHalf, {1e9, 0.0}};
  CHECK_THROWS_AS(simulate(path, far), NoDetection);
  const RaySpec through_start{Side::Right, 0.4, {0.0, 0.0}};
  CHECK_THROWS_AS(simulate(path, through_start), std::invalid_argument);
}

TEST_CASE("sweep over the tuned strategy stays below the bound") {
  // Past the finite-horizon excess of the early turns, no tangent ray
  // beats the asymptotic worst case.
  SweepSpec spec;
  spec.params = kStar;
  spec.i_min = 20;
  spec.i_max = 28;
  spec.beta_samples = 500;
  const SweepReport rep = sweep(spec);
  CHECK(rep.worst.ratio < 9.12725 + 1e-5);
  CHECK(rep.cells == 9L * 500L);
  CHECK(rep.i_converged > 0);

  // The excess itself decays geometrically with the turn index.
  double prev = 1e9;
  for (int i : {5, 10, 15, 20}) {
    SweepSpec one = spec;
    one.i_min = one.i_max = i;
    const double w = sweep(one).worst.ratio;
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("sweep reproduces the boundary-dominated worst case") {
  SweepSpec spec;
  spec.params = {2.0, 0.231477};
  spec.i_min = 12;
  spec.i_max = 25;
  spec.beta_samples = 300;
  const SweepReport rep = sweep(spec);
  CHECK(rep.worst.ratio == doctest::Approx(9.2466202).epsilon(2e-5));
  CHECK(rep.worst_beta == doctest::Approx(kPiHalf));
}

TEST_CASE("sweep reproduces the interior worst case") {
  SweepSpec spec;
  spec.params = {1.98, 0.165};
  spec.i_min = 18;
  spec.i_max = 30;
  spec.beta_samples = 500;
  const SweepReport rep = sweep(spec);
  CHECK(std::abs(rep.worst.ratio - 9.2131877) < 1e-4);
  CHECK(std::abs(rep.worst_beta - 0.1883083) < 5e-3);  // grid-limited
}

TEST_CASE("offset anchors never beat the tangent family") {
  SweepSpec tangent;
  tangent.params = kStar;
  tangent.i_min = 12;
  tangent.i_max = 20;
  tangent.beta_samples = 120;
  const double best_tangent = sweep(tangent).worst.ratio;
  for (double dx : {1e-6, 1e-3, 0.1, 0.4}) {
    SweepSpec off = tangent;
    off.policy = AnchorPolicy::Offset;
    off.offset_dx = dx;
    const SweepReport rep = sweep(off);
    CHECK(rep.worst.ratio < best_tangent + 1e-6);
  }
}

TEST_CASE("oracle equivalence of the sweep grid") {
  const SearchPath path = build_path(kStar, 21);
  double worst = 0.0;
  for (int i = 2; i <= 18; ++i) {
    for (int k = 0; k < 50; ++k) {
      const double beta = kStar.alpha + (kPiHalf - kStar.alpha) * k / 49;
      const double sim = simulate(path, tangent_ray_at_turn(kStar, i, beta)).ratio;
      worst = std::max(worst, std::abs(sim - ratio_finite(kStar, i, beta)));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("mirrored sweeps agree exactly") {
  const SearchPath path = build_path(kStar, 16);
  const SearchPath flipped = mirror(path);
  for (int i : {3, 4, 7, 10}) {
    for (double beta : {0.2, 0.7, 1.3, kPiHalf}) {
      const RaySpec ray = tangent_ray_at_turn(kStar, i, beta);
      const RatioReport a = simulate(path, ray);
      const RatioReport b = simulate(flipped, mirror(ray));
      CHECK(a.ratio == b.ratio);
    }
  }
}

TEST_CASE("parallel sweep equals the serial reference bit for bit") {
  SweepSpec spec;
  spec.params = kStar;
  spec.i_min = 2;
  spec.i_max = 20;
  spec.beta_samples = 150;
  spec.threads = 0;  // all cores
  const SweepReport par = sweep(spec, true);
  const SweepReport ser = sweep_serial(spec, true);
  CHECK(par.worst.ratio == ser.worst.ratio);
  CHECK(par.worst_i == ser.worst_i);
  CHECK(par.worst_beta == ser.worst_beta);
  REQUIRE(par.all.size() == ser.all.size());
  for (std::size_t k = 0; k < par.all.size(); ++k) {
    CHECK(par.all[k].ratio == ser.all[k].ratio);
  }
}
