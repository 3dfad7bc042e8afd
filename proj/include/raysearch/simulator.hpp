#pragma once

#include <optional>
#include <vector>

#include "raysearch/geometry.hpp"
#include "raysearch/strategy.hpp"

namespace raysearch {

/// Outcome of running one path against one ray.
struct RatioReport {
  RaySpec ray;
  Hit hit;
  double alg_length = 0.0;
  double opt_length = 0.0;
  double ratio = 0.0;
};

/// Measure the path against the ray: online cost is the first-hit arc
/// length with tangential contacts skipped, offline cost the perpendicular
/// distance from the start.  Throws NoDetection when the path prefix never
/// crosses the ray.
RatioReport simulate(const SearchPath& path, const RaySpec& ray);

enum class AnchorPolicy {
  TangentAtTurn,  // rays tangent at the turning points
  Offset          // anchors pushed outward beyond the turn by a relative dx
};

struct SweepSpec {
  StrategyParams params;
  int i_min = 2;
  int i_max = 25;
  int beta_samples = 200;
  AnchorPolicy policy = AnchorPolicy::TangentAtTurn;
  double offset_dx = 0.0;  // relative outward shift for AnchorPolicy::Offset
  int n_turns = kDefaultTurns;
  int threads = 1;  // worker count for the parallel kernel; <=0 uses all cores
};

struct SweepCell {
  int i = 0;
  double beta = 0.0;
  double ratio = 0.0;
};

struct SweepReport {
  RatioReport worst;
  int worst_i = 0;
  double worst_beta = 0.0;
  long cells = 0;
  /// Smallest turn index at which the finite ratio of the tangent family
  /// agrees with the asymptotic ratio to 1e-7 over the beta grid.
  int i_converged = 0;
  std::vector<SweepCell> all;  // filled when collect_all is set
};

/// Worst-case ray for the tangent family at turning points, parallel kernel.
RaySpec tangent_ray_at_turn(const StrategyParams& params, int i, double beta,
                            double offset_dx = 0.0);

SweepReport sweep(const SweepSpec& spec, bool collect_all = false);

/// Serial reference implementation of the same sweep; kept for testing the
/// parallel kernel against.
SweepReport sweep_serial(const SweepSpec& spec, bool collect_all = false);

}  // namespace raysearch
