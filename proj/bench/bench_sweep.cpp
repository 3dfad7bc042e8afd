// Timing comparison of the parallel sweep kernels against their serial
// reference implementations.

#include <chrono>
#include <cstdio>

#include "raysearch/simulator.hpp"
#include "raysearch/terrain.hpp"

namespace rs = raysearch;

namespace {

template <class F>
double time_ms(F&& f, int repeats = 3) {
  double best = 1e300;
  for (int k = 0; k < repeats; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  const rs::StrategyParams params{1.978624821, 0.166547577};

  rs::SweepSpec spec;
  spec.params = params;
  spec.i_min = 2;
  spec.i_max = 28;
  spec.beta_samples = 4000;
  spec.threads = 0;

  double worst_serial = 0.0, worst_parallel = 0.0;
  const double t_serial = time_ms([&] { worst_serial = rs::sweep_serial(spec).worst.ratio; });
  const double t_parallel = time_ms([&] { worst_parallel = rs::sweep(spec).worst.ratio; });

  std::printf("tangent sweep, %ld cells\n", (spec.i_max - spec.i_min + 1L) * spec.beta_samples);
  std::printf("  serial   %8.1f ms  worst %.12f\n", t_serial, worst_serial);
  std::printf("  parallel %8.1f ms  worst %.12f  speedup %.2fx\n", t_parallel,
              worst_parallel, t_serial / t_parallel);

  const rs::Terrain terrain = rs::make_random_barrier_terrain(params, 1, 8, 12);
  const auto rays = rs::make_ray_grid(params, 200000, 2, 18);
  double tw_serial = 0.0, tw_parallel = 0.0;
  const double tt_serial =
      time_ms([&] { tw_serial = rs::terrain_sweep_serial(params, terrain, rays).worst.ratio; });
  const double tt_parallel = time_ms(
      [&] { tw_parallel = rs::terrain_sweep(params, terrain, rays, rs::kDefaultTurns, 0).worst.ratio; });

  std::printf("terrain sweep, %zu rays\n", rays.size());
  std::printf("  serial   %8.1f ms  worst %.12f\n", tt_serial, tw_serial);
  std::printf("  parallel %8.1f ms  worst %.12f  speedup %.2fx\n", tt_parallel,
              tw_parallel, tt_serial / tt_parallel);

  return worst_serial == worst_parallel && tw_serial == tw_parallel ? 0 : 1;
}
