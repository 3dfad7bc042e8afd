#include "raysearch/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
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

struct CellOutcome {
  double ratio = -1.0;
  long index = -1;
  RatioReport report;
};

// Deterministic max-reduction: larger ratio wins, ties go to the lower
// cell index so the result is independent of the thread partition.
void merge_best(CellOutcome& best, const CellOutcome& cand) {
  if (cand.index < 0) return;
  if (cand.ratio > best.ratio ||
      (cand.ratio == best.ratio && cand.index < best.index)) {
    best = cand;
  }
}

template <class Eval>
SweepReport run_sweep(const SweepSpec& spec, bool collect_all, Eval&& eval,
                      long n_cells, bool parallel) {
  SweepReport out;
  out.cells = n_cells;
  if (collect_all) out.all.resize(static_cast<std::size_t>(n_cells));

  CellOutcome best;
  std::atomic<bool> failed{false};
  std::string error;

#ifdef _OPENMP
  const int want = spec.threads > 0 ? spec.threads : omp_get_max_threads();
#else
  const int want = 1;
  (void)parallel;
#endif

#ifdef _OPENMP
#pragma omp parallel num_threads(parallel ? want : 1)
  {
    CellOutcome local;
#pragma omp for schedule(static) nowait
    for (long idx = 0; idx < n_cells; ++idx) {
      if (failed) continue;
      try {
        const CellOutcome c = eval(idx, collect_all ? &out.all : nullptr);
        merge_best(local, c);
      } catch (const std::exception& e) {
#pragma omp critical
        {
          failed = true;
          error = e.what();
        }
      }
    }
#pragma omp critical
    merge_best(best, local);
  }
#else
  for (long idx = 0; idx < n_cells; ++idx) {
    const CellOutcome c = eval(idx, collect_all ? &out.all : nullptr);
    merge_best(best, c);
  }
#endif

  if (failed) throw NoDetection("sweep: " + error);
  out.worst = best.report;
  return out;
}
}  // namespace

RatioReport simulate(const SearchPath& path, const RaySpec& ray) {
  const double opt = perp_distance_to_ray(ray);
  if (!(opt > 1e-12)) {
    throw std::invalid_argument("simulate: ray passes through the start");
  }
  const std::optional<Hit> hit = first_hit(path, ray, /*skip_tangential=*/true);
  if (!hit) throw NoDetection("simulate: path prefix never crosses the ray");
  RatioReport rep;
  rep.ray = ray;
  rep.hit = *hit;
  rep.alg_length = hit->arc_length;
  rep.opt_length = opt;
  rep.ratio = rep.alg_length / rep.opt_length;
  return rep;
}

RaySpec tangent_ray_at_turn(const StrategyParams& params, int i, double beta,
                            double offset_dx) {
  RaySpec ray;
  ray.side = (i % 2 == 1) ? Side::Right : Side::Left;
  ray.beta = std::min(beta, kPiHalf);
  ray.anchor = turning_point(params, i);
  ray.anchor.x *= 1.0 + offset_dx;
  return ray;
}

namespace {
SweepReport sweep_impl(const SweepSpec& spec, bool collect_all, bool parallel) {
  spec.params.validate();
  if (spec.i_min < 1 || spec.i_max < spec.i_min) {
    throw std::invalid_argument("sweep: bad turn range");
  }
  if (spec.beta_samples < 2) throw std::invalid_argument("sweep: need >= 2 beta samples");
  const int n_turns = std::max(spec.n_turns, spec.i_max + 3);
  const SearchPath path = build_path(spec.params, n_turns);

  const double a = spec.params.alpha;
  const int nb = spec.beta_samples;
  const int ni = spec.i_max - spec.i_min + 1;
  const long n_cells = static_cast<long>(nb) * ni;
  const double dx = spec.policy == AnchorPolicy::Offset ? spec.offset_dx : 0.0;

  auto eval = [&](long idx, std::vector<SweepCell>* all) {
    const int i = spec.i_min + static_cast<int>(idx / nb);
    const int k = static_cast<int>(idx % nb);
    const double beta = a + (kPiHalf - a) * k / (nb - 1);
    const RaySpec ray = tangent_ray_at_turn(spec.params, i, beta, dx);
    const RatioReport rep = simulate(path, ray);
    if (all) (*all)[static_cast<std::size_t>(idx)] = {i, beta, rep.ratio};
    CellOutcome c;
    c.ratio = rep.ratio;
    c.index = idx;
    c.report = rep;
    return c;
  };

  SweepReport out = run_sweep(spec, collect_all, eval, n_cells, parallel);

  // Recover the worst cell coordinates from the worst ray.
  out.worst_beta = out.worst.ray.beta;
  {
    const double ax = std::abs(out.worst.ray.anchor.x) / (1.0 + dx);
    out.worst_i =
        static_cast<int>(std::lround(std::log(ax) / std::log(spec.params.r))) + 1;
  }

  // Convergence marker of the tangent family toward the asymptotic ratio.
  out.i_converged = 0;
  for (int i = spec.i_min; i <= spec.i_max && out.i_converged == 0; ++i) {
    double worst_gap = 0.0;
    for (int k = 0; k < nb; ++k) {
      const double beta = a + (kPiHalf - a) * k / (nb - 1);
      if (a == 0.0 && beta == 0.0) continue;
      worst_gap = std::max(worst_gap,
                           std::abs(ratio_finite(spec.params, i, beta) -
                                    ratio_asymptotic(spec.params, beta)));
    }
    if (worst_gap < 1e-7) out.i_converged = i;
  }
  return out;
}
}  // namespace

SweepReport sweep(const SweepSpec& spec, bool collect_all) {
  return sweep_impl(spec, collect_all, /*parallel=*/true);
}

SweepReport sweep_serial(const SweepSpec& spec, bool collect_all) {
  return sweep_impl(spec, collect_all, /*parallel=*/false);
}

}  // namespace raysearch
