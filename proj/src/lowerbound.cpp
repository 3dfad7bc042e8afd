#include "raysearch/lowerbound.hpp"

#include <cmath>
#include <stdexcept>

namespace raysearch {

double triangle_bound(double d_y, double p_coeff) {
  if (!(d_y > 0.0)) throw std::invalid_argument("triangle_bound: d_y must be positive");
  if (!(p_coeff > 0.0)) throw std::invalid_argument("triangle_bound: p_coeff must be positive");
  const double run = std::hypot(p_coeff + 1.0, d_y);
  return std::max(run, run / d_y);
}

double circle_bound(double d_y) {
  if (!(d_y > 0.0) || d_y > 1.0) {
    throw std::invalid_argument("circle_bound: d_y must lie in (0, 1]");
  }
  return std::sqrt(64.0 / (d_y * d_y) - 1.0) + 1.0 / d_y +
         std::asin(d_y / std::sqrt(64.0 - d_y * d_y));
}

double lower_bound() {
  const int n = 10000;
  double prev = circle_bound(1.0 / n);
  for (int k = 2; k <= n; ++k) {
    const double v = circle_bound(static_cast<double>(k) / n);
    if (!(v < prev)) throw std::logic_error("lower_bound: curve failed to decrease");
    prev = v;
  }
  return circle_bound(1.0);
}

LowerBoundCurve lower_bound_curve(int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("lower_bound_curve: need >= 2 samples");
  LowerBoundCurve c;
  c.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 1; k <= n_samples; ++k) {
    const double dy = static_cast<double>(k) / n_samples;
    c.samples.emplace_back(dy, circle_bound(dy));
  }
  return c;
}

}  // namespace raysearch
