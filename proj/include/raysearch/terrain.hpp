#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raysearch/geometry.hpp"
#include "raysearch/simulator.hpp"
#include "raysearch/strategy.hpp"

namespace raysearch {

struct Barrier {
  double x = 0.0;
  double height = 0.0;
};

/// Where a segment first enters terrain, and what blocks it there.
struct TerrainContact {
  Point point;
  double t = 0.0;          // parameter along the query segment in [0, 1]
  int barrier_index = -1;  // set for barrier terrains
  int chain_edge = -1;     // set for monotone-chain terrains
};

/// Obstacle model of the 1.5D variant.  Either an x-monotone chain bounding
/// the free space from below, or the canonical list of vertical barriers
/// standing on the baseline; the start (0, 0) must be in free space.
class Terrain {
 public:
  enum class Kind { Barriers, Monotone };

  static Terrain none() { return barriers({}); }
  static Terrain barriers(std::vector<Barrier> bs);
  static Terrain monotone(std::vector<Point> chain);

  Kind kind() const { return kind_; }
  bool empty() const;
  const std::vector<Barrier>& barrier_list() const { return barriers_; }
  const std::vector<Point>& chain() const { return chain_; }

  /// Earliest point on a->b that enters the terrain.  Entries at the very
  /// start of the segment (t <= t_min) are ignored so motion can resume
  /// from a point on the obstacle boundary.
  std::optional<TerrainContact> first_contact(const Point& a, const Point& b,
                                              double t_min = 1e-12) const;

  /// True when the segment stays in the closed free space.
  bool segment_free(const Point& a, const Point& b, double tol = 1e-9) const;

  /// Barrier tops / chain vertices, the bend candidates of geodesics.
  std::vector<Point> obstacle_vertices() const;

  void validate() const;

 private:
  Kind kind_ = Kind::Barriers;
  std::vector<Barrier> barriers_;  // sorted by x
  std::vector<Point> chain_;       // strictly increasing x
};

/// One terrain episode of the adapted strategy: contact, climb, turn,
/// return to the contact x-coordinate with the planned arc length restored.
struct TerrainEpisode {
  double plan_arc_hit = 0.0;   // plan arc length at the contact
  double plan_arc_sync = 0.0;  // plan arc length at the regained point
  double budget = 0.0;         // plan_arc_sync - plan_arc_hit
  Point hit;
  Point turn;
  Point regained;
};

struct AdaptedPath {
  SearchPath path;
  std::vector<TerrainEpisode> episodes;
};

/// Terrain-adapted strategy.
///
/// The agent follows a vertically shifted copy of the plan.  On terrain
/// contact it budgets the planned out-and-back arc length to the contact
/// x-coordinate, climbs while the climb direction is blocked, flies along
/// the slope when free, and turns at the unique point where the remaining
/// budget equals the slope-return distance; the regained point sits at the
/// contact x with the plan's arc length spent exactly, never lower than
/// the planned point.  Subsequent motion follows a fresh copy of the plan
/// moved up to the regained point.
AdaptedPath adapt_strategy(const StrategyParams& params, const Terrain& terrain,
                           int n_turns = kDefaultTurns);

/// Shortest start-to-ray path length in the closed free space above the
/// terrain, via the visibility graph over start and obstacle vertices.
/// Throws Unreachable when no node sees the ray.
double geodesic_opt(const Terrain& terrain, const RaySpec& ray);

/// Reusable geodesic engine: node-to-node distances are computed once per
/// terrain, each ray only needs the goal links.
class GeodesicSolver {
 public:
  explicit GeodesicSolver(const Terrain& terrain);
  double opt(const RaySpec& ray) const;

 private:
  const Terrain& terrain_;
  std::vector<Point> nodes_;
  std::vector<double> dist_;  // shortest free-space distance start -> node
};

/// Constants of the second wedge of candidate worst-case rays after a
/// terrain episode at turn i: the minimal return-ray slope angle gamma, the
/// triangle corners P1, P2, P3 and the slope and inclination of the line
/// carrying the translated barrier end points.
struct WedgeConstants {
  double gamma = 0.0;    // arctan((2 - sin a)/cos a)
  double slope_l = 0.0;  // slope of the line through P2 and P3
  double delta = 0.0;    // inclination angle of that line at P2, radians
  Point P1, P2, P3;
};

WedgeConstants wedge_constants(const StrategyParams& params, int i);

/// Margin by which the vertical boundary worst case of the plain strategy
/// dominates every ray of the second wedge at turn i, evaluated with the
/// inclination angle delta (radians).  Positive margins certify dominance.
double w2_margin(const StrategyParams& params, int i, double delta);

/// Limit of w2_margin for large i.
double w2_margin_asymptotic(const StrategyParams& params, double delta);

/// Distance from the start to the wedge-opening ray of slope angle gamma
/// through turning point i, and the factor it carries in front of r^(i-1).
double dist_to_R_gamma(const StrategyParams& params, int i);
double dist_to_R_gamma_factor(const StrategyParams& params, int i);

/// Run every ray of the grid against the adapted strategy, with the
/// geodesic optimum as the offline cost.  Parallel kernel plus a serial
/// reference implementation.
SweepReport terrain_sweep(const StrategyParams& params, const Terrain& terrain,
                          const std::vector<RaySpec>& rays,
                          int n_turns = kDefaultTurns, int threads = 1);
SweepReport terrain_sweep_serial(const StrategyParams& params, const Terrain& terrain,
                                 const std::vector<RaySpec>& rays,
                                 int n_turns = kDefaultTurns);

/// Check the adaptation invariants: at every regained point the arc length
/// equals the planned arc length and the x-coordinate matches while the
/// height dominates the plan; the whole path stays clear of the terrain.
/// Returns an empty string when everything holds, else a description.
std::string check_adaptation(const StrategyParams& params, const Terrain& terrain,
                             const AdaptedPath& adapted, int n_turns = kDefaultTurns,
                             double tol = 1e-9);

/// Collapse an x-monotone chain to its worst-case core: one vertical
/// barrier per record height, heights nondecreasing outward on each side.
Terrain barrier_core_reduce(const Terrain& terrain);

/// Seeded barrier terrain: per side, barriers at x = +-r^j u with
/// u in [0.3, 1), heights a fraction in [0.1, 1.0] of the local budget
/// above the planned leg.
Terrain make_random_barrier_terrain(const StrategyParams& params, std::uint64_t seed,
                                    int max_per_side = 8, int max_turn = 12);

/// Mixed ray grid for terrain sweeps: tangent rays at the turning points
/// plus seeded random rays anchored on the baseline.
std::vector<RaySpec> make_ray_grid(const StrategyParams& params, int n,
                                   std::uint64_t seed, int i_max = 20);

}  // namespace raysearch
