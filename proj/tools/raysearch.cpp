// Command-line front end: optimization, ratio curves, lower bounds,
// simulation sweeps, terrain runs and the regression suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "raysearch/lowerbound.hpp"
#include "raysearch/optimizer.hpp"
#include "raysearch/ratio.hpp"
#include "raysearch/simulator.hpp"
#include "raysearch/terrain.hpp"
#include "raysearch/verify.hpp"

namespace rs = raysearch;
using nlohmann::json;

namespace {

constexpr double kPiHalf = std::numbers::pi / 2;

rs::Precision precision_from_env() {
  const char* env = std::getenv("RAYSEARCH_PRECISION");
  if (env != nullptr && std::string(env) == "extended") return rs::Precision::Extended;
  return rs::Precision::Double;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.precision(17);
  return out;
}

rs::Terrain load_terrain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open terrain file: " + path);
  json j;
  in >> j;
  if (j.contains("chain")) {
    std::vector<rs::Point> chain;
    for (const auto& v : j["chain"]) chain.push_back({v.at(0), v.at(1)});
    return rs::Terrain::monotone(std::move(chain));
  }
  if (j.contains("barriers")) {
    std::vector<rs::Barrier> bs;
    for (const auto& v : j["barriers"]) bs.push_back({v.at(0), v.at(1)});
    return rs::Terrain::barriers(std::move(bs));
  }
  throw std::runtime_error("terrain file needs a \"chain\" or \"barriers\" key");
}

json ray_to_json(const rs::RaySpec& ray) {
  return json{{"side", ray.side == rs::Side::Right ? "right" : "left"},
              {"beta", ray.beta},
              {"anchor", {ray.anchor.x, ray.anchor.y}}};
}

json report_to_json(const rs::RatioReport& rep) {
  return json{{"ray", ray_to_json(rep.ray)},
              {"hit", {{"point", {rep.hit.point.x, rep.hit.point.y}},
                       {"arc_length", rep.hit.arc_length},
                       {"kind", rep.hit.kind == rs::HitKind::Crossing ? "crossing"
                                                                      : "tangential"}}},
              {"alg_length", rep.alg_length},
              {"opt_length", rep.opt_length},
              {"ratio", rep.ratio}};
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << std::endl;
  } else {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competitive ray search in the half-plane"};
  app.require_subcommand(1);

  double r = 1.978624821;
  double alpha = 0.166547577;
  double beta = 0.25;
  double tol = 1e-9;
  double target = 9.1273;
  int turn = 10;
  int imax = 25;
  int betas = 200;
  int samples = 1000;
  int rays = 10000;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string terrain_path;

  auto* cmd_opt = app.add_subcommand("optimize", "balance and minimize the worst-case ratio");
  cmd_opt->add_option("--tol", tol, "outer tolerance in r");
  cmd_opt->add_option("--target", target, "narrowing target ratio");
  cmd_opt->add_option("--out", out_path, "trace CSV path");

  auto* cmd_curve = app.add_subcommand("ratio-curve", "emit C(r,alpha,beta) and its derivative");
  cmd_curve->add_option("--r", r);
  cmd_curve->add_option("--alpha", alpha);
  cmd_curve->add_option("--samples", samples, "number of beta samples");
  cmd_curve->add_option("--out", out_path, "CSV path");

  auto* cmd_lb = app.add_subcommand("lower-bound", "emit the lower-bound curve");
  cmd_lb->add_option("--samples", samples);
  cmd_lb->add_option("--out", out_path, "CSV path");

  auto* cmd_sim = app.add_subcommand("simulate", "run one tangent ray against the strategy");
  cmd_sim->add_option("--r", r);
  cmd_sim->add_option("--alpha", alpha);
  cmd_sim->add_option("--beta", beta);
  cmd_sim->add_option("--turn", turn, "turning point index of the tangent ray");
  cmd_sim->add_option("--out", out_path, "JSON path (stdout when omitted)");

  auto* cmd_sweep = app.add_subcommand("sweep", "worst ratio over the tangent-ray family");
  cmd_sweep->add_option("--r", r);
  cmd_sweep->add_option("--alpha", alpha);
  cmd_sweep->add_option("--imax", imax);
  cmd_sweep->add_option("--betas", betas);
  cmd_sweep->add_option("--workers", workers);
  cmd_sweep->add_option("--dump", out_path, "per-cell ratios CSV");

  auto* cmd_terrain = app.add_subcommand("terrain-sim", "sweep rays over a terrain");
  cmd_terrain->add_option("--terrain", terrain_path, "terrain JSON file")->required();
  cmd_terrain->add_option("--r", r);
  cmd_terrain->add_option("--alpha", alpha);
  cmd_terrain->add_option("--rays", rays);
  cmd_terrain->add_option("--seed", seed);
  cmd_terrain->add_option("--workers", workers);
  cmd_terrain->add_option("--out", out_path, "JSON report path");

  auto* cmd_verify = app.add_subcommand("verify", "run the full regression suite");
  cmd_verify->add_option("--workers", workers);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_opt) {
      const rs::OptimizationResult res = rs::optimize(tol, target, precision_from_env());
      if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << "# target=" << target << " tol=" << tol << "\n";
        out << "r,alpha,c\n";
        for (const auto& it : res.trace) {
          out << it.r << "," << it.alpha << "," << it.c << "\n";
        }
      }
      std::cout.precision(17);
      std::cout << "r*     = " << res.r_star << "\n"
                << "alpha* = " << res.alpha_star << "\n"
                << "c*     = " << res.c_star << "\n"
                << "beta   = " << res.beta_interior << "\n";
      return 0;
    }

    if (*cmd_curve) {
      const rs::StrategyParams params{r, alpha};
      auto out = open_out(out_path.empty() ? "ratio_curve.csv" : out_path);
      out << "# r=" << r << " alpha=" << alpha << "\n";
      out << "beta,C_asymptotic,C_prime\n";
      for (int k = 0; k < samples; ++k) {
        const double b = alpha + (kPiHalf - alpha) * k / (samples - 1);
        out << b << "," << rs::ratio_asymptotic(params, b) << ","
            << rs::ratio_derivative(params, b) << "\n";
      }
      return 0;
    }

    if (*cmd_lb) {
      const rs::LowerBoundCurve curve = rs::lower_bound_curve(samples);
      auto out = open_out(out_path.empty() ? "lower_bound.csv" : out_path);
      out << "d_y,R\n";
      for (const auto& [dy, v] : curve.samples) out << dy << "," << v << "\n";
      return 0;
    }

    if (*cmd_sim) {
      const rs::StrategyParams params{r, alpha};
      const rs::SearchPath path = rs::build_path(params, std::max(turn + 3, rs::kDefaultTurns));
      const rs::RaySpec ray = rs::tangent_ray_at_turn(params, turn, beta);
      const rs::RatioReport rep = rs::simulate(path, ray);
      json j = report_to_json(rep);
      j["params"] = {{"r", r}, {"alpha", alpha}, {"turn", turn}};
      j["analytic_ratio"] = rs::ratio_finite(params, turn, beta);
      write_json(out_path, j);
      return 0;
    }

    if (*cmd_sweep) {
      rs::SweepSpec spec;
      spec.params = {r, alpha};
      spec.i_max = imax;
      spec.beta_samples = betas;
      spec.threads = workers;
      const rs::SweepReport rep = rs::sweep(spec, !out_path.empty());
      if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << "# r=" << r << " alpha=" << alpha << " imax=" << imax
            << " betas=" << betas << "\n";
        out << "i,beta,ratio\n";
        for (const auto& cell : rep.all) {
          out << cell.i << "," << cell.beta << "," << cell.ratio << "\n";
        }
      }
      std::cout.precision(17);
      std::cout << "cells          = " << rep.cells << "\n"
                << "worst ratio    = " << rep.worst.ratio << "\n"
                << "worst turn     = " << rep.worst_i << "\n"
                << "worst beta     = " << rep.worst_beta << "\n"
                << "asymptotic at  = i >= " << rep.i_converged << "\n";
      return 0;
    }

    if (*cmd_terrain) {
      const rs::StrategyParams params{r, alpha};
      const rs::Terrain terrain = load_terrain(terrain_path);
      const std::vector<rs::RaySpec> grid = rs::make_ray_grid(params, rays, seed);
      const rs::SweepReport rep =
          rs::terrain_sweep(params, terrain, grid, rs::kDefaultTurns, workers);
      json j;
      j["seed"] = seed;
      j["params"] = {{"r", r}, {"alpha", alpha}};
      j["rays"] = rays;
      j["terrain"] = terrain_path;
      j["worst"] = report_to_json(rep.worst);
      write_json(out_path, j);
      return 0;
    }

    if (*cmd_verify) {
      rs::AcceptanceOptions opts;
      opts.threads = workers;
      const auto results = rs::run_acceptance(opts, &std::cout);
      int failures = 0;
      for (const auto& res : results) failures += res.pass ? 0 : 1;
      std::cout << (failures == 0 ? "all criteria passed"
                                  : std::to_string(failures) + " criteria failed")
                << std::endl;
      return failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
