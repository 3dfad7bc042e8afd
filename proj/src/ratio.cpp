#include "raysearch/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "raysearch/scalar_opt.hpp"

namespace raysearch {

namespace {
constexpr double kPiHalf = std::numbers::pi / 2;
constexpr double kBetaTol = 1e-12;

void check_beta_range(const StrategyParams& params, double beta) {
  if (beta < params.alpha - kBetaTol || beta > kPiHalf + kBetaTol) {
    throw std::invalid_argument("ratio: beta outside [alpha, pi/2]");
  }
}

struct InteriorMaxResult {
  double beta;
  double value;
};

// Interior maximum of the asymptotic ratio.  Uses the analytic
// localization to [alpha, 2 alpha] when the derivative signs bracket a
// maximum there; falls back to a dense scan over [alpha, pi/2] otherwise.
InteriorMaxResult interior_maximum(const StrategyParams& params) {
  const double a = params.alpha;
  auto f = [&](double b) { return ratio_asymptotic(params, b); };

  const double hi2a = std::min(2 * a, kPiHalf);
  const bool bracketed = 2 * a < kPiHalf && ratio_derivative(params, a) > 0.0 &&
                         ratio_derivative(params, hi2a) < 0.0;
  if (bracketed) {
    auto [x, v] = golden_max<double>(f, a, hi2a, 1e-12);
    return {x, v};
  }
  // Dense scan plus golden refinement between the neighbours of the best
  // sample; unimodality is not guaranteed here.
  const int n = 2000;
  int best = 0;
  double best_v = -1.0;
  auto beta_at = [&](int k) { return a + (kPiHalf - a) * k / (n - 1); };
  for (int k = 0; k < n; ++k) {
    const double v = f(beta_at(k));
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  const double lo = beta_at(std::max(0, best - 1));
  const double hi = beta_at(std::min(n - 1, best + 1));
  auto [x, v] = golden_max<double>(f, lo, hi, 1e-12);
  return {x, v};
}
}  // namespace

double classic_cowpath_ratio(std::span<const double> xs, int k) {
  if (k < 1 || static_cast<std::size_t>(k) + 1 > xs.size()) {
    throw std::invalid_argument("classic_cowpath_ratio: need x_1..x_{k+1}");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0)) throw std::invalid_argument("classic_cowpath_ratio: depths must be positive");
    if (i >= 2 && !(xs[i] > xs[i - 2])) {
      throw std::invalid_argument("classic_cowpath_ratio: depths must increase per side");
    }
  }
  double sum = 0.0;
  for (int i = 0; i <= k; ++i) sum += xs[static_cast<std::size_t>(i)];
  return 1.0 + 2.0 * sum / xs[static_cast<std::size_t>(k - 1)];
}

double ratio_finite(const StrategyParams& params, int i, double beta) {
  params.validate();
  if (i < 1) throw std::invalid_argument("ratio_finite: i must be >= 1");
  check_beta_range(params, beta);
  const double r = params.r;
  const double a = params.alpha;
  const double rim1 = std::pow(r, i - 1);
  const double ri = rim1 * r;
  const double num = analytic_detection_length(params, i, beta);
  const double den = std::sin(beta) * rim1 +
                     2.0 * std::cos(beta) * std::tan(a) *
                         ((ri - 1.0) / (r - 1.0) - 0.5 * rim1);
  return num / den;
}

double ratio_asymptotic(const StrategyParams& params, double beta) {
  params.validate();
  check_beta_range(params, beta);
  if (params.alpha == 0.0 && beta == 0.0) {
    throw std::invalid_argument("ratio_asymptotic: alpha = beta = 0 is degenerate");
  }
  return detail::ratio_asymptotic_t<double>(params.r, params.alpha, beta);
}

double ratio_boundary_pi_half(const StrategyParams& params) {
  params.validate();
  return detail::ratio_boundary_pi_half_t<double>(params.r, params.alpha);
}

double ratio_boundary_alpha(const StrategyParams& params) {
  // Pure point evaluation; r = 1 is a legal degenerate input here.
  if (!std::isfinite(params.r) || params.r < 1.0) {
    throw std::invalid_argument("ratio_boundary_alpha: r must be >= 1");
  }
  if (!(params.alpha > 0.0) || params.alpha >= kPiHalf) {
    throw std::invalid_argument("ratio_boundary_alpha: alpha must lie in (0, pi/2)");
  }
  return detail::ratio_boundary_alpha_t<double>(params.r, params.alpha);
}

double ratio_derivative(const StrategyParams& params, double beta) {
  params.validate();
  check_beta_range(params, beta);
  return detail::ratio_derivative_t<double>(params.r, params.alpha, beta);
}

WorstCase worst_case_beta(const StrategyParams& params) {
  params.validate();
  const double a = params.alpha;

  const double boundary_pi2 = ratio_boundary_pi_half(params);
  const double boundary_alpha =
      a > 0.0 ? ratio_boundary_alpha(params) : -std::numeric_limits<double>::infinity();

  InteriorMaxResult interior{kPiHalf, boundary_pi2};
  if (a > 0.0) interior = interior_maximum(params);

  WorstCase out;
  if (interior.value > boundary_pi2 && interior.value > boundary_alpha) {
    out = {interior.beta, interior.value, WorstKind::InteriorMax};
  } else if (boundary_pi2 >= boundary_alpha) {
    out = {kPiHalf, boundary_pi2, WorstKind::BoundaryPiHalf};
  } else {
    out = {a, boundary_alpha, WorstKind::BoundaryAlpha};
  }
  return out;
}

}  // namespace raysearch
