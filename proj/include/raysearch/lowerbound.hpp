#pragma once

#include <utility>
#include <vector>

namespace raysearch {

/// Triangle construction: unfold the strategy to a straight run from
/// (-p_coeff, 0) to (1, d_y) and compare against the vertical ray at
/// distance 1 and the horizontal ray at distance d_y.
double triangle_bound(double d_y, double p_coeff = 8.0);

/// Circle-avoiding construction on (0, 1]: tangent to the half-circle of
/// radius d_y, an arc, and a unit horizontal run, all over d_y.
double circle_bound(double d_y);

/// Best proven lower bound: the circle construction at d_y = 1.  Asserts
/// monotone decrease of the curve on a 10^4-point grid first.
double lower_bound();

struct LowerBoundCurve {
  std::vector<std::pair<double, double>> samples;  // (d_y, value)
};

LowerBoundCurve lower_bound_curve(int n_samples);

}  // namespace raysearch
