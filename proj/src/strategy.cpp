#include "raysearch/strategy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace raysearch {

void StrategyParams::validate() const {
  if (!std::isfinite(r) || !std::isfinite(alpha)) {
    throw std::invalid_argument("strategy: non-finite parameters");
  }
  if (!(r > 1.0)) throw std::invalid_argument("strategy: r must exceed 1");
  if (alpha < 0.0 || alpha >= std::numbers::pi / 2) {
    throw std::invalid_argument("strategy: alpha must lie in [0, pi/2)");
  }
}

double axis_height(const StrategyParams& params, int i) {
  params.validate();
  if (i < 0) throw std::invalid_argument("axis_height: i must be >= 0");
  if (i == 0) return 0.0;
  return 2.0 * std::tan(params.alpha) * (std::pow(params.r, i) - 1.0) / (params.r - 1.0);
}

Point turning_point(const StrategyParams& params, int i) {
  params.validate();
  if (i < 1) throw std::invalid_argument("turning_point: i must be >= 1");
  const double r = params.r;
  const double sign = (i % 2 == 1) ? 1.0 : -1.0;
  const double x = sign * std::pow(r, i - 1);
  const double y = 2.0 * std::tan(params.alpha) *
                   ((std::pow(r, i) - 1.0) / (r - 1.0) - 0.5 * std::pow(r, i - 1));
  return {x, y};
}

SearchPath build_path(const StrategyParams& params, int n_turns) {
  params.validate();
  if (n_turns < 1) throw std::invalid_argument("build_path: n_turns must be >= 1");
  SearchPath path;
  path.append({0.0, 0.0});
  path.append(turning_point(params, 1));
  for (int i = 2; i <= n_turns; ++i) {
    path.append({0.0, axis_height(params, i - 1)});
    path.append(turning_point(params, i));
  }
  path.validate();
  return path;
}

double analytic_detection_length(const StrategyParams& params, int i, double beta) {
  params.validate();
  if (i < 1) throw std::invalid_argument("analytic_detection_length: i must be >= 1");
  const double a = params.alpha;
  if (beta < a - 1e-12 || beta > std::numbers::pi / 2 + 1e-12) {
    throw std::invalid_argument("analytic_detection_length: beta outside [alpha, pi/2]");
  }
  const double r = params.r;
  const double ri = std::pow(r, i);
  const double rim1 = std::pow(r, i - 1);
  const double geom_sum = (ri - 1.0) / (r - 1.0);
  const double out_and_turn = (2.0 * geom_sum + ri) / std::cos(a);
  const double beyond_turn =
      std::sin(beta - a) / std::sin(beta + a) * (ri + rim1) / std::cos(a);
  return out_and_turn + beyond_turn;
}

}  // namespace raysearch
