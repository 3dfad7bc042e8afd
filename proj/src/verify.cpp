#include "raysearch/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "raysearch/lowerbound.hpp"
#include "raysearch/optimizer.hpp"
#include "raysearch/ratio.hpp"
#include "raysearch/simulator.hpp"
#include "raysearch/terrain.hpp"

namespace raysearch {

namespace {

constexpr double kPiHalf = std::numbers::pi / 2;

// Reference strategy parameters used across the suite.
constexpr double kRStar = 1.978624821;
constexpr double kAlphaStar = 0.166547577;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  template <class T>
  Check& note(const T& v) {
    detail << v;
    return *this;
  }
  Check& expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
    return *this;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

CriterionResult finish(int id, const std::string& name, Check& c, std::ostream* log) {
  CriterionResult r{id, name, c.ok, c.detail.str()};
  if (log) {
    (*log) << (r.pass ? "[PASS] " : "[FAIL] ") << "C" << id << " " << name;
    if (!r.detail.empty()) (*log) << " -- " << r.detail;
    (*log) << std::endl;
  }
  return r;
}

template <class Fn>
void run_criterion(int id, const std::string& name, std::vector<CriterionResult>& out,
                   std::ostream* log, Fn&& fn) {
  Check c;
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  out.push_back(finish(id, name, c, log));
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* log) {
  std::vector<CriterionResult> results;
  const StrategyParams star{kRStar, kAlphaStar};

  OptimizationResult opt;
  run_criterion(1, "optimizer reproduces the balanced optimum", results, log, [&](Check& c) {
    opt = optimize(1e-9, 9.1273);
    c.note("r*=" + fmt(opt.r_star) + " a*=" + fmt(opt.alpha_star) +
           " c*=" + fmt(opt.c_star) + " beta=" + fmt(opt.beta_interior));
    c.expect(std::abs(opt.r_star - kRStar) <= 1e-5, "r* within 1e-5 of 1.978624821");
    c.expect(std::abs(opt.alpha_star - kAlphaStar) <= 1e-5,
             "alpha* within 1e-5 of 0.166547577");
    c.expect(opt.c_star > 9.1271 && opt.c_star < 9.12725, "c* in (9.1271, 9.12725)");
    c.expect(std::abs(opt.beta_interior - 0.190681180073897) <= 1e-6,
             "interior beta within 1e-6 of 0.190681180073897");
  });

  run_criterion(2, "vertical-ray boundary ratio", results, log, [&](Check& c) {
    const double nine = ratio_boundary_pi_half({2.0, 0.0});
    c.expect(nine == 9.0, "boundary ratio of (2, 0) is exactly 9");
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.0, 1.4);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double a = ua(rng);
      const double got = ratio_boundary_pi_half({2.0, a});
      const double want = 9.0 / std::cos(a);
      worst = std::max(worst, std::abs(got - want) / want);
    }
    c.note("max rel err vs 9/cos(alpha): " + fmt(worst));
    c.expect(worst < 1e-14, "rel err < 1e-14 for 20 random alpha");
  });

  run_criterion(3, "reference strategies' worst cases", results, log, [&](Check& c) {
    const WorstCase w1 = worst_case_beta({2.0, 0.231477});
    c.note("C(2,0.231477)=" + fmt(w1.c_star));
    c.expect(std::abs(w1.c_star - 9.24663) <= 2e-4, "worst ratio 9.24663 +- 2e-4");
    const WorstCase w2 = worst_case_beta({1.98, 0.165});
    c.note("; C(1.98,0.165)=" + fmt(w2.c_star) + " at beta=" + fmt(w2.beta_star));
    c.expect(std::abs(w2.c_star - 9.21274) <= 2e-4, "worst ratio 9.21274 +- 2e-4");
    c.expect(std::abs(w2.beta_star - 0.192355) <= 1e-4, "beta 0.192355 +- 1e-4");
  });

  run_criterion(4, "balanced slope at r = 2", results, log, [&](Check& c) {
    const double ab = balance_alpha(2.0);
    const double cb = worst_case_beta({2.0, ab}).c_star;
    c.note("alpha=" + fmt(ab) + " balanced ratio=" + fmt(cb));
    c.expect(std::abs(ab - 0.1677775) <= 1e-4, "alpha 0.1677775 +- 1e-4");
    c.expect(cb < 9.1282, "balanced ratio below 9.1282");
  });

  run_criterion(5, "lower-bound constructions", results, log, [&](Check& c) {
    const double circ = circle_bound(1.0);
    const double tri = triangle_bound(1.0);
    c.note("circle(1)=" + fmt(circ) + " triangle(1)=" + fmt(tri));
    c.expect(std::abs(circ - 9.063577796336) <= 1e-9, "circle bound at 1");
    c.expect(std::abs(tri - std::sqrt(82.0)) <= 1e-12, "triangle bound sqrt(82)");
    bool monotone = true;
    try {
      (void)lower_bound();  // asserts strict decrease on the 1e4 grid
    } catch (const std::exception&) {
      monotone = false;
    }
    c.expect(monotone, "circle bound strictly decreasing on 1e4 grid");
    c.expect(opt.c_star > circ, "c* above the lower bound");
  });

  run_criterion(6, "interval narrowing", results, log, [&](Check& c) {
    const NarrowingSteps s = narrow_box_steps(9.1273);
    c.note("r=(" + fmt(s.box.r_lo) + ", " + fmt(s.box.r_hi) + ") alpha=(" +
           fmt(s.box.alpha_lo) + ", " + fmt(s.box.alpha_hi) + ") unfold=" +
           fmt(s.alpha_lo_unfold));
    c.expect(std::abs(s.box.r_lo - 1.913) <= 1e-3, "r_lo 1.913 +- 1e-3");
    c.expect(std::abs(s.box.r_hi - 1.9885) <= 1e-3, "r_hi 1.9885 +- 1e-3");
    c.expect(std::abs(s.box.alpha_lo - 0.156) <= 1e-3, "alpha_lo 0.156 +- 1e-3");
    c.expect(std::abs(s.box.alpha_hi - 0.1673) <= 1e-3, "alpha_hi 0.1673 +- 1e-3");
    c.expect(std::abs(s.alpha_lo_unfold - 0.109781) <= 1e-5,
             "unfolding bound 0.109781 +- 1e-5");
  });

  run_criterion(7, "oracle equivalence", results, log, [&](Check& c) {
    const SearchPath path = build_path(star, 33);
    double worst_sim = 0.0;
    double worst_tail = 0.0;
    for (int i = 2; i <= 30; ++i) {
      for (int k = 0; k < 100; ++k) {
        const double beta = star.alpha + (kPiHalf - star.alpha) * k / 99;
        const RaySpec ray = tangent_ray_at_turn(star, i, beta);
        const double sim = simulate(path, ray).ratio;
        worst_sim = std::max(worst_sim, std::abs(sim - ratio_finite(star, i, beta)));
        if (i == 30) {
          worst_tail = std::max(worst_tail, std::abs(ratio_finite(star, 30, beta) -
                                                     ratio_asymptotic(star, beta)));
        }
      }
    }
    c.note("max |sim - finite|=" + fmt(worst_sim) + ", |finite(30) - asym|=" +
           fmt(worst_tail));
    c.expect(worst_sim < 1e-8, "simulated vs closed form below 1e-8");
    c.expect(worst_tail < 1e-7, "finite horizon 30 vs asymptotic below 1e-7");

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst_forms = 0.0;
    for (int k = 0; k < 100000; ++k) {
      const double r = 1.2 + 1.8 * u01(rng);
      const double a = 0.01 + 0.49 * u01(rng);
      const double b = a + (kPiHalf - a) * u01(rng);
      const auto f = detail::ratio_forms<double>(r, a, b);
      worst_forms = std::max({worst_forms, std::abs(f.plain - f.factored),
                              std::abs(f.factored - f.cos_scaled)});
    }
    c.note(", forms disagreement=" + fmt(worst_forms));
    c.expect(worst_forms < 1e-12, "three ratio forms agree below 1e-12");
  });

  run_criterion(8, "ratio derivative", results, log, [&](Check& c) {
    const int n = 20;
    double worst_rel = 0.0;
    bool pattern = true;
    for (int ir = 0; ir < n; ++ir) {
      const double r = 1.913 + (1.9885 - 1.913) * ir / (n - 1);
      for (int ia = 0; ia < n; ++ia) {
        const double a = 0.156 + (0.1673 - 0.156) * ia / (n - 1);
        const StrategyParams p{r, a};
        pattern = pattern && ratio_derivative(p, a) > 0.0 &&
                  ratio_derivative(p, 2 * a) < 0.0 &&
                  ratio_derivative(p, kPiHalf - a) > 0.0;
        for (int ib = 0; ib < n; ++ib) {
          const double b = a + (kPiHalf - a) * ib / (n - 1);
          const long double h = 1e-6L;
          const long double fd =
              (detail::ratio_asymptotic_t<long double>(r, a, (long double)b + h) -
               detail::ratio_asymptotic_t<long double>(r, a, (long double)b - h)) /
              (2 * h);
          const double d = ratio_derivative(p, b);
          worst_rel = std::max(worst_rel,
                               std::abs(d - (double)fd) / std::abs((double)fd));
        }
      }
    }
    c.note("max rel err=" + fmt(worst_rel));
    c.expect(worst_rel < 1e-5, "derivative matches finite differences");
    c.expect(pattern, "sign pattern + at alpha, - at 2 alpha, + at pi/2 - alpha");
  });

  run_criterion(9, "terrain wedge constants", results, log, [&](Check& c) {
    const double slope = (2.0 - std::sin(kAlphaStar)) / std::cos(kAlphaStar);
    const WedgeConstants w = wedge_constants(star, 30);
    const double delta_deg = w.delta * 180.0 / std::numbers::pi;
    c.note("slope=" + fmt(slope) + " s_l=" + fmt(w.slope_l) + " delta=" + fmt(delta_deg));
    c.expect(std::abs(slope - 1.859957576113) <= 1e-9, "minimal wedge slope");
    c.expect(std::abs(w.slope_l - (-2.95062869307)) <= 1e-8, "slope of line l");
    c.expect(std::abs(delta_deg - 71.2779240409) <= 1e-6, "delta in degrees");
    const double d71 = 71.0 * std::numbers::pi / 180.0;
    const double m2 = w2_margin(star, 2, d71);
    const double m5 = w2_margin(star, 5, d71);
    const double ma = w2_margin_asymptotic(star, 71.277 * std::numbers::pi / 180.0);
    c.note("; margins i2=" + fmt(m2) + " i5=" + fmt(m5) + " asym=" + fmt(ma));
    c.expect(m2 > 0.0339, "margin at i=2 above 0.0339");
    c.expect(m5 > 0.1, "margin at i=5 above 0.1");
    c.expect(ma > 0.1195, "asymptotic margin above 0.1195");
  });

  run_criterion(10, "terrain dominance", results, log, [&](Check& c) {
    double worst = 0.0;
    std::string invariant_issue;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Terrain terrain = make_random_barrier_terrain(star, seed, 8, 12);
      const std::vector<RaySpec> rays = make_ray_grid(star, 10000, seed + 1000, 18);
      const AdaptedPath adapted = adapt_strategy(star, terrain);
      const std::string issue = check_adaptation(star, terrain, adapted);
      if (!issue.empty() && invariant_issue.empty()) {
        invariant_issue = "seed " + std::to_string(seed) + ": " + issue;
      }
      const SweepReport rep =
          terrain_sweep(star, terrain, rays, kDefaultTurns, options.threads);
      worst = std::max(worst, rep.worst.ratio);
    }
    c.note("max terrain ratio=" + fmt(worst));
    c.expect(worst <= opt.c_star + 1e-3, "terrain never worse than c* + 1e-3");
    c.expect(invariant_issue.empty(), "episode invariants: " + invariant_issue);
  });

  run_criterion(11, "empty-terrain degeneracy", results, log, [&](Check& c) {
    const SearchPath pure = build_path(star, kDefaultTurns);
    const AdaptedPath adapted = adapt_strategy(star, Terrain::none(), kDefaultTurns);
    bool identical = adapted.path.size() == pure.size();
    if (identical) {
      for (std::size_t i = 0; i < pure.size(); ++i) {
        identical = identical && pure.vertices[i].x == adapted.path.vertices[i].x &&
                    pure.vertices[i].y == adapted.path.vertices[i].y;
      }
    }
    c.expect(identical, "adapted path vertex-identical to the plain strategy");

    SweepSpec spec;
    spec.params = star;
    spec.i_min = 2;
    spec.i_max = 20;
    spec.beta_samples = 60;
    spec.threads = options.threads;
    const SweepReport plain = sweep(spec);
    std::vector<RaySpec> rays;
    for (int i = spec.i_min; i <= spec.i_max; ++i) {
      for (int k = 0; k < spec.beta_samples; ++k) {
        const double beta =
            star.alpha + (kPiHalf - star.alpha) * k / (spec.beta_samples - 1);
        rays.push_back(tangent_ray_at_turn(star, i, beta));
      }
    }
    const SweepReport viaterrain =
        terrain_sweep(star, Terrain::none(), rays, kDefaultTurns, options.threads);
    const double gap = std::abs(plain.worst.ratio - viaterrain.worst.ratio);
    c.note("sweep gap=" + fmt(gap));
    c.expect(gap <= 1e-12, "terrain sweep equals plain sweep to 1e-12");
  });

  return results;
}

}  // namespace raysearch
