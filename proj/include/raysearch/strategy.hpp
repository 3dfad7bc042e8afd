#pragma once

#include "raysearch/geometry.hpp"

namespace raysearch {

/// Generalized cow-path strategy: alternating horizontal depths r^i and a
/// fixed climb angle alpha for every leg.
struct StrategyParams {
  double r = 2.0;
  double alpha = 0.0;

  void validate() const;
};

/// Default number of turns; the geometric corrections of the finite ratio
/// vanish below 1e-8 well before this horizon.
inline constexpr int kDefaultTurns = 30;

/// Height h_i of the i-th visit of the vertical axis, h_0 = 0.
double axis_height(const StrategyParams& params, int i);

/// Turning point of the i-th leg (i >= 1); x alternates sign starting
/// positive, |x| = r^(i-1).
Point turning_point(const StrategyParams& params, int i);

/// Explicit polyline of the strategy: start, first turn, then alternating
/// axis crossings and turns, n_turns turns in total.
SearchPath build_path(const StrategyParams& params, int n_turns);

/// Closed-form arc length to the detection point of the ray with angle
/// beta in [alpha, pi/2] that is tangent at turning point i and slightly
/// missed there: detection happens after the turn at i+1.
double analytic_detection_length(const StrategyParams& params, int i, double beta);

}  // namespace raysearch
