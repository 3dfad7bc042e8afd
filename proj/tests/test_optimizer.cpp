#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "raysearch/errors.hpp"
#include "raysearch/optimizer.hpp"

using namespace raysearch;

TEST_CASE("narrowing chain values") {
  const NarrowingSteps s = narrow_box_steps(9.1273);
  // Frozen from an independent high-precision replay of the chain.
  CHECK(s.alpha_hi == doctest::Approx(0.1672107125358210).epsilon(1e-12));
  CHECK(s.alpha_lo_unfold == doctest::Approx(0.1097818086604244).epsilon(1e-12));
  CHECK(s.r_hi == doctest::Approx(1.9957870748063027).epsilon(1e-12));
  CHECK(s.r_lo_first == doctest::Approx(1.8270279008364050).epsilon(1e-12));
  CHECK(s.alpha_lo == doctest::Approx(0.1574562140867041).epsilon(1e-12));
  CHECK(s.r_lo == doctest::Approx(1.9186993617553502).epsilon(1e-12));

  // The box contains the tuned pair.
  CHECK(s.box.r_lo < 1.978624821);
  CHECK(s.box.r_hi > 1.978624821);
  CHECK(s.box.alpha_lo < 0.166547577);
  CHECK(s.box.alpha_hi > 0.166547577);
}

TEST_CASE("narrowing edge cases") {
  CHECK_THROWS_AS(narrow_box(9.0), InfeasibleTarget);
  CHECK_THROWS_AS(narrow_box(8.5), InfeasibleTarget);
  const ParamBox tight = narrow_box(9.1273);
  const ParamBox wide = narrow_box(10.0);
  CHECK(wide.r_lo < tight.r_lo);
  CHECK(wide.r_hi > tight.r_hi);
  CHECK(wide.alpha_lo < tight.alpha_lo);
  CHECK(wide.alpha_hi > tight.alpha_hi);
}

TEST_CASE("balancing the two worst cases") {
  const double a2 = balance_alpha(2.0);
  CHECK(a2 == doctest::Approx(0.1677775).epsilon(1e-4));
  CHECK(a2 == doctest::Approx(0.1677783163255262).epsilon(1e-9));
  const double c2 = worst_case_beta({2.0, a2}).c_star;
  CHECK(c2 < 9.1282);

  const double a_star = balance_alpha(1.978624821);
  CHECK(std::abs(a_star - 0.166547577) < 1e-6);

  // The left edge of the published box balances above the target.
  const double a_left = balance_alpha(1.913);
  CHECK(worst_case_beta({1.913, a_left}).c_star > 9.1273);
}

TEST_CASE("balanced ratio is numerically unimodal over the box") {
  const ParamBox box = narrow_box(9.1273);
  const int n = 200;
  std::vector<double> g(n);
  for (int k = 0; k < n; ++k) {
    const double r = box.r_lo + (box.r_hi - box.r_lo) * k / (n - 1);
    g[static_cast<std::size_t>(k)] = worst_case_beta({r, balance_alpha(r)}).c_star;
  }
  int sign_changes = 0;
  for (int k = 0; k + 2 < n; ++k) {
    const double d1 = g[k + 1] - g[k];
    const double d2 = g[k + 2] - g[k + 1];
    if ((d1 < 0) != (d2 < 0)) ++sign_changes;
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("optimization lands on the tuned pair") {
  const OptimizationResult res = optimize(1e-9);
  CHECK(res.r_star == doctest::Approx(1.978624821).epsilon(1e-5));
  CHECK(res.alpha_star == doctest::Approx(0.166547577).epsilon(1e-5));
  CHECK(res.c_star > 9.1271);
  CHECK(res.c_star < 9.12725);
  CHECK(res.c_star > 9.0636);
  CHECK_FALSE(res.trace.empty());
  // The beta = alpha boundary stays strictly below the balanced maximum.
  CHECK(ratio_boundary_alpha({res.r_star, res.alpha_star}) < res.c_star);

  // Coarser tolerance moves the minimizer by less than 1e-3.
  const OptimizationResult coarse = optimize(1e-4);
  CHECK(std::abs(coarse.r_star - res.r_star) < 1e-3);
}

TEST_CASE("restricting to r = 2 reproduces the balanced boundary value") {
  const double a2 = balance_alpha(2.0);
  const double c2 = worst_case_beta({2.0, a2}).c_star;
  CHECK(c2 == doctest::Approx(9.1282).epsilon(2e-5));
}

TEST_CASE("extended precision agrees with double") {
  const OptimizationResult d = optimize(1e-9, 9.1273, Precision::Double);
  const OptimizationResult x = optimize(1e-9, 9.1273, Precision::Extended);
  CHECK(std::abs(d.r_star - x.r_star) < 1e-6);
  CHECK(std::abs(d.c_star - x.c_star) < 1e-9);
}
