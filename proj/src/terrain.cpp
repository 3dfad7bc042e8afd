#include "raysearch/terrain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "raysearch/errors.hpp"
#include "raysearch/ratio.hpp"

namespace raysearch {

namespace {
constexpr double kPiHalf = std::numbers::pi / 2;

double rel_tol(double scale) { return 1e-12 * (1.0 + std::abs(scale)); }
}  // namespace

Terrain Terrain::barriers(std::vector<Barrier> bs) {
  Terrain t;
  t.kind_ = Kind::Barriers;
  std::sort(bs.begin(), bs.end(), [](const Barrier& a, const Barrier& b) { return a.x < b.x; });
  t.barriers_ = std::move(bs);
  t.validate();
  return t;
}

Terrain Terrain::monotone(std::vector<Point> chain) {
  Terrain t;
  t.kind_ = Kind::Monotone;
  t.chain_ = std::move(chain);
  t.validate();
  return t;
}

bool Terrain::empty() const {
  return kind_ == Kind::Barriers ? barriers_.empty() : chain_.empty();
}

void Terrain::validate() const {
  if (kind_ == Kind::Barriers) {
    for (std::size_t i = 0; i < barriers_.size(); ++i) {
      const Barrier& b = barriers_[i];
      if (!std::isfinite(b.x) || !std::isfinite(b.height) || b.height < 0.0) {
        throw std::invalid_argument("terrain: bad barrier");
      }
      if (b.x == 0.0) throw std::invalid_argument("terrain: barrier at the start");
      if (i > 0 && !(b.x > barriers_[i - 1].x)) {
        throw std::invalid_argument("terrain: barrier x must be distinct");
      }
    }
    return;
  }
  if (chain_.size() < 2) {
    if (!chain_.empty()) throw std::invalid_argument("terrain: chain needs >= 2 vertices");
    return;
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    const Point& p = chain_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.y < 0.0) {
      throw std::invalid_argument("terrain: bad chain vertex");
    }
    if (i > 0 && !(p.x > chain_[i - 1].x)) {
      throw std::invalid_argument("terrain: chain must be strictly x-monotone");
    }
  }
  // The start must lie in free space.
  if (chain_.front().x <= 0.0 && chain_.back().x >= 0.0) {
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
      const Point& p = chain_[i];
      const Point& q = chain_[i + 1];
      if (p.x <= 0.0 && q.x >= 0.0) {
        const double t = (0.0 - p.x) / (q.x - p.x);
        const double y0 = p.y + t * (q.y - p.y);
        if (y0 > 1e-9) throw std::invalid_argument("terrain: start buried under the chain");
      }
    }
  }
}

std::optional<TerrainContact> Terrain::first_contact(const Point& a, const Point& b,
                                                     double t_min) const {
  const double len = distance(a, b);
  if (len == 0.0) return std::nullopt;
  std::optional<TerrainContact> best;

  auto consider = [&](double t, Point p, int barrier, int edge) {
    if (t <= t_min || t > 1.0) return;
    if (!best || t < best->t) best = TerrainContact{p, t, barrier, edge};
  };

  if (kind_ == Kind::Barriers) {
    const double dx = b.x - a.x;
    if (dx == 0.0) return std::nullopt;  // motion along a wall never crosses one
    for (std::size_t k = 0; k < barriers_.size(); ++k) {
      const Barrier& w = barriers_[k];
      // A wall blocks only a genuine crossing of its x; a segment that
      // starts on the wall face moves off it freely.
      if (std::abs(w.x - a.x) <= rel_tol(w.x) * 1e3) continue;
      if (w.x <= std::min(a.x, b.x) || w.x > std::max(a.x, b.x)) continue;
      const double t = (w.x - a.x) / dx;
      if (t <= t_min || t > 1.0) continue;
      const double yc = a.y + t * (b.y - a.y);
      if (yc < w.height - rel_tol(w.height)) {
        consider(t, Point{w.x, yc}, static_cast<int>(k), -1);
      }
    }
    return best;
  }

  // Monotone chain: per edge, the gap between path and terrain is linear in
  // x over the overlap; a contact is where it crosses into the negative.
  if (chain_.size() < 2) return std::nullopt;
  const double dx = b.x - a.x;
  for (std::size_t e = 0; e + 1 < chain_.size(); ++e) {
    const Point& p = chain_[e];
    const Point& q = chain_[e + 1];
    const double xlo = std::max(std::min(a.x, b.x), p.x);
    const double xhi = std::min(std::max(a.x, b.x), q.x);
    if (!(xlo <= xhi)) continue;
    if (dx == 0.0) continue;  // vertical path pieces never descend into terrain
    auto path_y = [&](double x) { return a.y + (x - a.x) / dx * (b.y - a.y); };
    auto edge_y = [&](double x) { return p.y + (x - p.x) / (q.x - p.x) * (q.y - p.y); };
    // Order the overlap endpoints along the direction of travel.
    const double x_entry = dx > 0 ? xlo : xhi;
    const double x_exit = dx > 0 ? xhi : xlo;
    const double g_entry = path_y(x_entry) - edge_y(x_entry);
    const double g_exit = path_y(x_exit) - edge_y(x_exit);
    const double tol = rel_tol(std::max(std::abs(p.y), std::abs(q.y)));
    double x_hit = std::numeric_limits<double>::quiet_NaN();
    if (g_entry < -tol) {
      x_hit = x_entry;
    } else if (g_exit < -tol) {
      // Linear gap: root between entry and exit.
      x_hit = x_entry + (x_exit - x_entry) * (g_entry / (g_entry - g_exit));
    } else {
      continue;
    }
    const double t = (x_hit - a.x) / dx;
    consider(t, Point{x_hit, path_y(x_hit)}, -1, static_cast<int>(e));
  }
  return best;
}

bool Terrain::segment_free(const Point& a, const Point& b, double tol) const {
  if (kind_ == Kind::Barriers) {
    const double dx = b.x - a.x;
    if (dx == 0.0) return true;
    for (const Barrier& w : barriers_) {
      if (w.x <= std::min(a.x, b.x) || w.x >= std::max(a.x, b.x)) continue;
      const double t = (w.x - a.x) / dx;
      const double yc = a.y + t * (b.y - a.y);
      if (yc < w.height - tol) return false;
    }
    return true;
  }
  if (chain_.size() < 2) return true;
  const double dx = b.x - a.x;
  for (std::size_t e = 0; e + 1 < chain_.size(); ++e) {
    const Point& p = chain_[e];
    const Point& q = chain_[e + 1];
    const double xlo = std::max(std::min(a.x, b.x), p.x);
    const double xhi = std::min(std::max(a.x, b.x), q.x);
    if (!(xlo <= xhi)) continue;
    auto edge_y = [&](double x) { return p.y + (x - p.x) / (q.x - p.x) * (q.y - p.y); };
    if (dx == 0.0) {
      if (std::min(a.y, b.y) < edge_y(a.x) - tol) return false;
      continue;
    }
    auto path_y = [&](double x) { return a.y + (x - a.x) / dx * (b.y - a.y); };
    if (path_y(xlo) < edge_y(xlo) - tol) return false;
    if (path_y(xhi) < edge_y(xhi) - tol) return false;
  }
  return true;
}

std::vector<Point> Terrain::obstacle_vertices() const {
  std::vector<Point> out;
  if (kind_ == Kind::Barriers) {
    out.reserve(barriers_.size());
    for (const Barrier& b : barriers_) out.push_back({b.x, b.height});
  } else {
    out = chain_;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Terrain-adapted strategy
// ---------------------------------------------------------------------------

namespace {

struct Blocking {
  int barrier = -1;
  int chain_edge = -1;
  bool any() const { return barrier >= 0 || chain_edge >= 0; }
  static Blocking none() { return {}; }
  static Blocking from(const TerrainContact& c) { return {c.barrier_index, c.chain_edge}; }
};

}  // namespace

AdaptedPath adapt_strategy(const StrategyParams& params, const Terrain& terrain,
                           int n_turns) {
  params.validate();
  terrain.validate();
  const SearchPath plan = build_path(params, n_turns);
  const double tan_a = std::tan(params.alpha);
  const double cos_a = std::cos(params.alpha);
  const double sin_a = std::sin(params.alpha);

  std::vector<double> turn_arcs;
  for (std::size_t idx = 1; idx < plan.size(); idx += 2) turn_arcs.push_back(plan.cum_len[idx]);

  AdaptedPath out;
  out.path.append({0.0, 0.0});
  auto emit = [&](Point p) {
    const Point& back = out.path.vertices.back();
    if (distance(back, p) > rel_tol(std::abs(p.x) + std::abs(p.y))) out.path.append(p);
  };

  double sigma = 0.0;
  double dy = 0.0;
  std::size_t seg = 0;
  const double total = plan.total_length();

  int guard = 0;
  while (sigma < total - rel_tol(total)) {
    if (++guard > 1000000) throw std::logic_error("adapt_strategy: no progress");
    while (seg + 1 < plan.size() && plan.cum_len[seg + 1] <= sigma + rel_tol(sigma)) ++seg;
    if (seg + 1 >= plan.size()) break;
    const Point A = plan.at_arc(sigma) + Point{0.0, dy};
    const Point B = plan.vertices[seg + 1] + Point{0.0, dy};
    const auto contact = terrain.first_contact(A, B);
    if (!contact) {
      emit(B);
      sigma = plan.cum_len[seg + 1];
      continue;
    }

    const Point hit = contact->point;
    const double sigma_h = sigma + contact->t * (plan.cum_len[seg + 1] - sigma);
    emit(hit);

    const auto it = std::lower_bound(turn_arcs.begin(), turn_arcs.end(),
                                     sigma_h - rel_tol(sigma_h));
    if (it == turn_arcs.end()) break;  // contact beyond the final planned turn
    const double sigma_turn = std::max(*it, sigma_h);
    const double budget = 2.0 * (sigma_turn - sigma_h);
    const double x_target = hit.x;
    const double dir = (B.x >= A.x) ? 1.0 : -1.0;

    Point cur = hit;
    double brem = budget;
    Blocking blocking = Blocking::from(*contact);

    auto required_return = [&](const Point& p) { return std::abs(p.x - x_target) / cos_a; };

    int episode_guard = 0;
    while (true) {
      if (++episode_guard > 100000) {
        throw BudgetInfeasible("adapt_strategy: episode failed to terminate");
      }
      const double gap = brem - required_return(cur);
      if (gap <= rel_tol(budget)) break;  // turn here

      if (blocking.barrier >= 0) {
        const Barrier& w = terrain.barrier_list()[static_cast<std::size_t>(blocking.barrier)];
        const double climbable = w.height - cur.y;
        if (climbable >= gap) {
          cur.y += gap;
          brem -= gap;
          emit(cur);
          break;
        }
        cur.y = w.height;
        brem -= climbable;
        emit(cur);
        blocking = Blocking::none();
        continue;
      }

      if (blocking.chain_edge >= 0) {
        const auto& chain = terrain.chain();
        const std::size_t e = static_cast<std::size_t>(blocking.chain_edge);
        const Point far = dir > 0 ? chain[e + 1] : chain[e];
        const double run = dir * (far.x - cur.x);
        if (run <= 0.0) {
          blocking = Blocking::none();
          continue;
        }
        const double rise = far.y - cur.y;
        if (rise <= tan_a * run + rel_tol(rise)) {
          // Surface ahead is no steeper than the climb slope: it is free.
          blocking = Blocking::none();
          continue;
        }
        const double piece = std::hypot(run, rise);
        const double ux = run / piece;
        const double rate = 1.0 + ux / cos_a;  // budget-minus-return decay per arc
        const double s_star = gap / rate;
        if (s_star <= piece) {
          cur = cur + (s_star / piece) * Point{dir * run, rise};
          brem -= s_star;
          emit(cur);
          break;
        }
        cur = far;
        brem -= piece;
        emit(cur);
        // Keep climbing while the surface beyond the vertex stays steeper
        // than the slope direction.
        blocking = Blocking::none();
        const bool has_next = dir > 0 ? (e + 2 < chain.size()) : (e >= 1);
        if (has_next) {
          const std::size_t ne = dir > 0 ? e + 1 : e - 1;
          const Point& np = chain[ne];
          const Point& nq = chain[ne + 1];
          const double nrun = dir > 0 ? (nq.x - np.x) : (np.x - nq.x);
          const double nrise = dir > 0 ? (nq.y - np.y) : (np.y - nq.y);
          if (nrise > tan_a * std::abs(nrun)) blocking.chain_edge = static_cast<int>(ne);
        }
        continue;
      }

      // Free slope flight toward the turn; the budget-vs-return gap closes
      // at rate 2 per unit arc, so the turn triggers after gap/2.
      const double s_star = gap / 2.0;
      const Point target = cur + s_star * Point{dir * cos_a, sin_a};
      const auto c2 = terrain.first_contact(cur, target);
      if (!c2) {
        cur = target;
        brem -= s_star;
        emit(cur);
        break;
      }
      const double moved = c2->t * s_star;
      cur = c2->point;
      brem -= moved;
      emit(cur);
      blocking = Blocking::from(*c2);
    }

    const Point turn_pt = cur;
    const double back_run = std::abs(turn_pt.x - x_target);
    const Point regained{x_target, turn_pt.y + tan_a * back_run};
    if (!terrain.segment_free(turn_pt, regained)) {
      throw BudgetInfeasible("adapt_strategy: return leg blocked by terrain");
    }
    emit(regained);

    if (budget > rel_tol(budget)) {
      out.episodes.push_back(
          {sigma_h, sigma_h + budget, budget, hit, turn_pt, regained});
    }
    sigma = sigma_h + budget;
    const Point planned = plan.at_arc(sigma);
    dy = regained.y - planned.y;
    if (dy < -1e-9 * (1.0 + std::abs(regained.y))) {
      throw std::logic_error("adapt_strategy: regained point below the plan");
    }
  }
  out.path.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Geodesic optimum
// ---------------------------------------------------------------------------

GeodesicSolver::GeodesicSolver(const Terrain& terrain) : terrain_(terrain) {
  nodes_.push_back({0.0, 0.0});
  for (const Point& v : terrain.obstacle_vertices()) nodes_.push_back(v);
  const std::size_t n = nodes_.size();
  const double inf = std::numeric_limits<double>::infinity();
  dist_.assign(n, inf);
  dist_[0] = 0.0;
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && dist_[i] < (u == n ? inf : dist_[u])) u = i;
    }
    if (u == n) break;
    done[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (!terrain_.segment_free(nodes_[u], nodes_[v])) continue;
      const double cand = dist_[u] + distance(nodes_[u], nodes_[v]);
      if (cand < dist_[v]) dist_[v] = cand;
    }
  }
}

double GeodesicSolver::opt(const RaySpec& ray) const {
  ray.validate();
  const Point src = ray.source();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(dist_[i])) continue;
    const Point& v = nodes_[i];
    const double off = ray.signed_offset(v);
    const Point foot = v - off * ray.normal();
    if (foot.y >= -1e-9 && terrain_.segment_free(v, foot)) {
      best = std::min(best, dist_[i] + std::abs(off));
    }
    if (terrain_.segment_free(v, src)) {
      best = std::min(best, dist_[i] + distance(v, src));
    }
  }
  if (!std::isfinite(best)) throw Unreachable("geodesic_opt: ray not reachable");
  return best;
}

double geodesic_opt(const Terrain& terrain, const RaySpec& ray) {
  return GeodesicSolver(terrain).opt(ray);
}

// ---------------------------------------------------------------------------
// Wedge constants and margins
// ---------------------------------------------------------------------------

WedgeConstants wedge_constants(const StrategyParams& params, int i) {
  params.validate();
  if (i < 2) throw std::invalid_argument("wedge_constants: i must be >= 2");
  const double r = params.r;
  const double a = params.alpha;
  WedgeConstants w;
  w.gamma = std::atan((2.0 - std::sin(a)) / std::cos(a));
  const double g = w.gamma;
  const double u = (std::pow(r, i - 1) - 1.0) / (r - 1.0);
  const double v = std::pow(r, i - 1);
  const double sg = std::sin(g), cg = std::cos(g), ta = std::tan(a);
  w.P1 = {2.0 * sg * std::sin(a) / std::cos(g + a) * u,
          2.0 * cg * std::sin(a) / std::cos(g + a) * u};
  w.P2 = {v, w.P1.y};
  w.P3 = {sg * sg * v + 2.0 * sg * cg * ta * (u + 0.5 * v),
          sg * cg * v + 2.0 * cg * cg * ta * (u + 0.5 * v)};
  // The slope of the line through P2 and P3 does not depend on i; the
  // u/v cross terms cancel exactly.
  w.slope_l = (w.P2.y - w.P3.y) / (w.P2.x - w.P3.x);
  w.delta = std::atan(-w.slope_l);
  return w;
}

double w2_margin(const StrategyParams& params, int i, double delta) {
  params.validate();
  if (i < 2) throw std::invalid_argument("w2_margin: i must be >= 2");
  const double r = params.r;
  const double a = params.alpha;
  const double g = std::atan((2.0 - std::sin(a)) / std::cos(a));
  const double lead = (1.0 - std::sin(g) * std::sin(delta)) *
                      (2.0 * std::sin(a) / std::cos(g + a)) *
                      (1.0 - (r - 1.0) / std::pow(r, i - 1));
  return lead - (1.0 - std::sin(delta)) * (r - 1.0);
}

double w2_margin_asymptotic(const StrategyParams& params, double delta) {
  params.validate();
  const double r = params.r;
  const double a = params.alpha;
  const double g = std::atan((2.0 - std::sin(a)) / std::cos(a));
  return (1.0 - std::sin(g) * std::sin(delta)) * (2.0 * std::sin(a) / std::cos(g + a)) -
         (1.0 - std::sin(delta)) * (r - 1.0);
}

double dist_to_R_gamma_factor(const StrategyParams& params, int i) {
  params.validate();
  if (i < 2) throw std::invalid_argument("dist_to_R_gamma: i must be >= 2");
  const double r = params.r;
  const double a = params.alpha;
  const double g = std::atan((2.0 - std::sin(a)) / std::cos(a));
  return 2.0 * std::cos(g) *
         ((1.0 - std::sin(a)) / std::cos(a) +
          std::tan(a) * (r - std::pow(r, 1 - i)) / (r - 1.0));
}

double dist_to_R_gamma(const StrategyParams& params, int i) {
  return dist_to_R_gamma_factor(params, i) * std::pow(params.r, i - 1);
}

// ---------------------------------------------------------------------------
// Terrain sweep
// ---------------------------------------------------------------------------

namespace {

SweepReport terrain_sweep_impl(const StrategyParams& params, const Terrain& terrain,
                               const std::vector<RaySpec>& rays, int n_turns,
                               int threads, bool parallel) {
  if (rays.empty()) throw std::invalid_argument("terrain_sweep: empty ray grid");
  const AdaptedPath adapted = adapt_strategy(params, terrain, n_turns);
  const GeodesicSolver solver(terrain);

  const long n = static_cast<long>(rays.size());
  SweepReport out;
  out.cells = n;

  double best_ratio = -1.0;
  long best_idx = -1;
  RatioReport best_rep;
  std::atomic<bool> failed{false};
  std::string error;

#ifdef _OPENMP
  const int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(parallel ? want : 1)
  {
    double l_ratio = -1.0;
    long l_idx = -1;
    RatioReport l_rep;
#pragma omp for schedule(static) nowait
    for (long k = 0; k < n; ++k) {
      if (failed) continue;
      try {
        const RaySpec& ray = rays[static_cast<std::size_t>(k)];
        const auto hit = first_hit(adapted.path, ray, /*skip_tangential=*/true);
        if (!hit) throw NoDetection("terrain_sweep: undetected ray");
        const double opt = solver.opt(ray);
        const double ratio = hit->arc_length / opt;
        if (ratio > l_ratio || (ratio == l_ratio && k < l_idx)) {
          l_ratio = ratio;
          l_idx = k;
          l_rep = {ray, *hit, hit->arc_length, opt, ratio};
        }
      } catch (const std::exception& e) {
#pragma omp critical
        {
          failed = true;
          error = e.what();
        }
      }
    }
#pragma omp critical
    {
      if (l_idx >= 0 && (l_ratio > best_ratio ||
                         (l_ratio == best_ratio && l_idx < best_idx))) {
        best_ratio = l_ratio;
        best_idx = l_idx;
        best_rep = l_rep;
      }
    }
  }
#else
  (void)threads;
  (void)parallel;
  for (long k = 0; k < n; ++k) {
    const RaySpec& ray = rays[static_cast<std::size_t>(k)];
    const auto hit = first_hit(adapted.path, ray, true);
    if (!hit) throw NoDetection("terrain_sweep: undetected ray");
    const double opt = solver.opt(ray);
    const double ratio = hit->arc_length / opt;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_idx = k;
      best_rep = {ray, *hit, hit->arc_length, opt, ratio};
    }
  }
#endif

  if (failed) throw NoDetection("terrain_sweep: " + error);
  out.worst = best_rep;
  out.worst_beta = best_rep.ray.beta;
  return out;
}

}  // namespace

SweepReport terrain_sweep(const StrategyParams& params, const Terrain& terrain,
                          const std::vector<RaySpec>& rays, int n_turns, int threads) {
  return terrain_sweep_impl(params, terrain, rays, n_turns, threads, true);
}

SweepReport terrain_sweep_serial(const StrategyParams& params, const Terrain& terrain,
                                 const std::vector<RaySpec>& rays, int n_turns) {
  return terrain_sweep_impl(params, terrain, rays, n_turns, 1, false);
}

// ---------------------------------------------------------------------------
// Worst-case core reduction and generators
// ---------------------------------------------------------------------------

std::string check_adaptation(const StrategyParams& params, const Terrain& terrain,
                             const AdaptedPath& adapted, int n_turns, double tol) {
  const SearchPath plan = build_path(params, n_turns);
  std::size_t cursor = 0;
  for (std::size_t e = 0; e < adapted.episodes.size(); ++e) {
    const TerrainEpisode& ep = adapted.episodes[e];
    const double scale = 1.0 + std::abs(ep.regained.x) + std::abs(ep.regained.y);
    while (cursor < adapted.path.size() &&
           distance(adapted.path.vertices[cursor], ep.regained) > tol * scale) {
      ++cursor;
    }
    if (cursor >= adapted.path.size()) {
      return "episode " + std::to_string(e) + ": regained point missing from path";
    }
    const double arc = adapted.path.cum_len[cursor];
    const double want = ep.plan_arc_sync;
    if (std::abs(arc - want) > tol * (1.0 + want)) {
      return "episode " + std::to_string(e) + ": arc length drifted by " +
             std::to_string(arc - want);
    }
    const Point planned = plan.at_arc(want);
    if (std::abs(planned.x - ep.regained.x) > tol * (1.0 + std::abs(planned.x))) {
      return "episode " + std::to_string(e) + ": regained x off the plan";
    }
    if (ep.regained.y < planned.y - tol * (1.0 + std::abs(planned.y))) {
      return "episode " + std::to_string(e) + ": regained point below the plan";
    }
  }
  for (std::size_t i = 0; i + 1 < adapted.path.size(); ++i) {
    if (!terrain.segment_free(adapted.path.vertices[i], adapted.path.vertices[i + 1], tol)) {
      return "segment " + std::to_string(i) + " penetrates the terrain";
    }
  }
  return {};
}

Terrain barrier_core_reduce(const Terrain& terrain) {
  if (terrain.kind() == Terrain::Kind::Barriers) return terrain;
  const auto& chain = terrain.chain();
  std::vector<Barrier> out;
  // Right side: record heights walking outward from the start.
  double record = 0.0;
  for (const Point& p : chain) {
    if (p.x <= 0.0) continue;
    if (p.y > record + 1e-12) {
      record = p.y;
      out.push_back({p.x, p.y});
    }
  }
  record = 0.0;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (it->x >= 0.0) continue;
    if (it->y > record + 1e-12) {
      record = it->y;
      out.push_back({it->x, it->y});
    }
  }
  return Terrain::barriers(std::move(out));
}

Terrain make_random_barrier_terrain(const StrategyParams& params, std::uint64_t seed,
                                    int max_per_side, int max_turn) {
  params.validate();
  if (max_per_side < 1 || max_turn < 4) {
    throw std::invalid_argument("make_random_barrier_terrain: bad limits");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u_pos(0.3, 1.0);
  std::uniform_real_distribution<double> u_frac(0.1, 1.0);
  const double tan_a = std::tan(params.alpha);
  const double cos_a = std::cos(params.alpha);

  std::vector<Barrier> bs;
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 1.0 : -1.0;
    // Turn indices whose turning point lies on this side.
    std::vector<int> turns;
    for (int i = 3; i <= max_turn; ++i) {
      if ((i % 2 == 1) == (side == 0)) turns.push_back(i);
    }
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_per_side));
    std::vector<int> chosen;
    for (int k = 0; k < count && !turns.empty(); ++k) {
      chosen.push_back(turns[rng() % turns.size()]);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    double prev_h = 0.0;
    for (int i : chosen) {
      const double reach = std::pow(params.r, i - 1);
      const double xb = sign * reach * u_pos(rng);
      // Height of the planned outbound leg at the barrier and the budget
      // that a contact there would receive.
      const double y_leg = axis_height(params, i - 1) + tan_a * std::abs(xb);
      const double budget = 2.0 * (reach - std::abs(xb)) / cos_a;
      double h = y_leg + u_frac(rng) * budget;
      h = std::max(h, prev_h + 1e-6);
      prev_h = h;
      bs.push_back({xb, h});
    }
  }
  // Distinct x values are required; nudge collisions apart.
  std::sort(bs.begin(), bs.end(), [](const Barrier& a, const Barrier& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < bs.size(); ++i) {
    if (bs[i].x <= bs[i - 1].x) bs[i].x = bs[i - 1].x + 1e-6 * (1.0 + std::abs(bs[i].x));
  }
  return Terrain::barriers(std::move(bs));
}

std::vector<RaySpec> make_ray_grid(const StrategyParams& params, int n,
                                   std::uint64_t seed, int i_max) {
  params.validate();
  if (n < 1) throw std::invalid_argument("make_ray_grid: n must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<RaySpec> rays;
  rays.reserve(static_cast<std::size_t>(n));

  // Probe the asymptotic regime: tangent rays at the last few turns and
  // random rays anchored at comparable depths.  Early turns are excluded;
  // their finite-horizon ratios sit above the asymptotic worst case and
  // belong to the additive constant of the competitive guarantee.
  const double a = params.alpha;
  const int i_lo = std::max(2, i_max - 4);
  const int n_tangent = n / 2;
  const int per_turn = std::max(1, n_tangent / std::max(1, i_max - i_lo + 1));
  for (int i = i_lo; i <= i_max && static_cast<int>(rays.size()) < n_tangent; ++i) {
    for (int k = 0; k < per_turn && static_cast<int>(rays.size()) < n_tangent; ++k) {
      const double beta =
          a + 0.01 + (kPiHalf - a - 0.01) * (per_turn == 1 ? 0.5 : double(k) / (per_turn - 1));
      rays.push_back(tangent_ray_at_turn(params, i, beta));
    }
  }
  while (static_cast<int>(rays.size()) < n) {
    RaySpec ray;
    ray.side = (rng() & 1) ? Side::Right : Side::Left;
    ray.beta = 0.05 + (kPiHalf - 0.05) * u01(rng);
    const double expo = (i_max - 5.0) + u01(rng) * 3.0;
    const double x = std::pow(params.r, expo);
    ray.anchor = {ray.side == Side::Right ? x : -x, 0.0};
    rays.push_back(ray);
  }
  return rays;
}

}  // namespace raysearch
