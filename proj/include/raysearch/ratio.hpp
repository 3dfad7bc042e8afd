#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "raysearch/strategy.hpp"

namespace raysearch {

namespace detail {

// Asymptotic competitive ratio of the strategy (r, alpha) against the
// tangent ray of angle beta, in three algebraically equal forms.  All three
// are evaluated on every call and must agree; disagreement indicates a
// broken build or out-of-domain inputs.
template <class T>
struct RatioForms {
  T plain;       // raw form after dropping the geometric correction terms
  T factored;    // (r+1)-factored form
  T cos_scaled;  // form with the 1/cos(alpha) prefactor
};

template <class T>
RatioForms<T> ratio_forms(T r, T a, T b) {
  using std::cos;
  using std::sin;
  using std::tan;
  const T R = r / (r - 1);
  const T S = sin(b - a) / sin(b + a);

  RatioForms<T> out;
  out.plain = (2 * (R + r / 2) + S * (r + 1)) /
              (2 * cos(b) * sin(a) * (R - T(0.5)) + cos(a) * sin(b));
  out.factored = (r + 1) * (R + S) / (2 * cos(b) * sin(a) * R + sin(b - a));
  out.cos_scaled =
      (r + 1) / cos(a) * (R + S) / (sin(b) + cos(b) * tan(a) * (r + 1) / (r - 1));
  return out;
}

template <class T>
T ratio_asymptotic_t(T r, T a, T b) {
  const RatioForms<T> f = ratio_forms(r, a, b);
  const T scale = std::max(T(1), std::abs(f.factored));
  if (std::abs(f.plain - f.factored) > T(1e-12) * scale ||
      std::abs(f.factored - f.cos_scaled) > T(1e-12) * scale) {
    throw std::logic_error("ratio: algebraic forms disagree");
  }
  return f.factored;
}

template <class T>
T ratio_boundary_pi_half_t(T r, T a) {
  return 2 / std::cos(a) * (r * r / (r - 1) + T(0.5));
}

template <class T>
T ratio_boundary_alpha_t(T r, T a) {
  return (r + 1) / std::sin(2 * a);
}

template <class T>
T ratio_derivative_t(T r, T a, T b) {
  using std::cos;
  using std::sin;
  const T R = r / (r - 1);
  const T D = 2 * cos(b) * sin(a) * R + sin(b - a);
  const T t1 = D * sin(2 * a) / (sin(b + a) * sin(b + a));
  const T t2 = (2 * sin(b) * sin(a) * R - cos(b - a)) * (R + sin(b - a) / sin(b + a));
  return (r + 1) * (t1 + t2) / (D * D);
}

}  // namespace detail

/// Classic linear-search ratio 1 + 2 * sum_{i=1}^{k+1} x_i / x_k for a
/// positive, per-side increasing depth sequence (1-based k).
double classic_cowpath_ratio(std::span<const double> xs, int k);

/// Competitive ratio against the tangent ray at turning point i with angle
/// beta, including all finite-horizon correction terms.
double ratio_finite(const StrategyParams& params, int i, double beta);

/// Asymptotic competitive ratio C(r, alpha, beta) for beta in [alpha, pi/2].
double ratio_asymptotic(const StrategyParams& params, double beta);

/// Boundary worst case at beta = pi/2 (vertical ray missed at a turn):
/// (2/cos alpha)(r^2/(r-1) + 1/2).  Minimized over r at r = 2 with value
/// 9/cos alpha.
double ratio_boundary_pi_half(const StrategyParams& params);

/// Boundary case beta = alpha (ray detected right after the next turn):
/// (r+1)/sin(2 alpha).  Requires alpha > 0.
double ratio_boundary_alpha(const StrategyParams& params);

/// Derivative of the asymptotic ratio with respect to beta.
double ratio_derivative(const StrategyParams& params, double beta);

enum class WorstKind { InteriorMax, BoundaryPiHalf, BoundaryAlpha };

struct WorstCase {
  double beta_star = 0.0;
  double c_star = 0.0;
  WorstKind kind = WorstKind::BoundaryPiHalf;
};

/// Supremum of the asymptotic ratio over beta in [alpha, pi/2].
///
/// When the derivative shows the rise-fall pattern on [alpha, 2 alpha] the
/// interior maximum is found there by golden section; otherwise a dense
/// scan with local refinement is used.  The result is compared against
/// both boundary values.
WorstCase worst_case_beta(const StrategyParams& params);

}  // namespace raysearch
