#include "raysearch/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "raysearch/errors.hpp"
#include "raysearch/scalar_opt.hpp"

namespace raysearch {

namespace {

template <class T>
constexpr T pi_half_v = std::numbers::pi_v<T> / 2;

// Smaller root r > 1 of (2/cos a)(r^2/(r-1) + 1/2) = target.
template <class T>
T boundary_r_lower(T target, T a) {
  const T A = target * std::cos(a) / 2 - T(0.5);
  if (!(A >= 4)) {
    throw InfeasibleTarget("narrow_box: beta = pi/2 boundary admits no r at this alpha");
  }
  return (A - std::sqrt(A * (A - 4))) / 2;
}

template <class T>
struct InteriorMaxT {
  T beta;
  T value;
};

template <class T>
InteriorMaxT<T> interior_maximum_t(T r, T a) {
  auto f = [&](T b) { return detail::ratio_asymptotic_t<T>(r, a, b); };
  const T hi2a = std::min(2 * a, pi_half_v<T>);
  if (2 * a < pi_half_v<T> && detail::ratio_derivative_t<T>(r, a, a) > 0 &&
      detail::ratio_derivative_t<T>(r, a, hi2a) < 0) {
    auto [x, v] = golden_max<T>(f, a, hi2a, T(1e-12));
    return {x, v};
  }
  const int n = 400;
  int best = 0;
  T best_v = T(-1);
  auto beta_at = [&](int k) { return a + (pi_half_v<T> - a) * T(k) / T(n - 1); };
  for (int k = 0; k < n; ++k) {
    const T v = f(beta_at(k));
    if (v > best_v) {
      best_v = v;
      best = k;
    }
  }
  auto [x, v] = golden_max<T>(f, beta_at(std::max(0, best - 1)),
                              beta_at(std::min(n - 1, best + 1)), T(1e-12));
  return {x, v};
}

template <class T>
T balance_alpha_t(T r, T tol) {
  auto diff = [&](T a) {
    return interior_maximum_t<T>(r, a).value -
           detail::ratio_boundary_pi_half_t<T>(r, a);
  };
  return bisect_sign_change<T>(diff, T(0.10), T(0.18), tol);
}

template <class T>
OptimizationResult optimize_t(double tol, double target_c) {
  const ParamBox box = narrow_box(target_c);

  std::vector<OptimizerIterate> trace;
  auto balanced_ratio = [&](T r) {
    const T a = balance_alpha_t<T>(r, T(1e-10));
    const T c = std::max(interior_maximum_t<T>(r, a).value,
                         detail::ratio_boundary_pi_half_t<T>(r, a));
    trace.push_back({static_cast<double>(r), static_cast<double>(a),
                     static_cast<double>(c)});
    return c;
  };

  auto [r_star, c_star] =
      golden_min<T>(balanced_ratio, T(box.r_lo), T(box.r_hi), T(tol));
  const T alpha_star = balance_alpha_t<T>(r_star, T(1e-10));
  const InteriorMaxT<T> interior = interior_maximum_t<T>(r_star, alpha_star);

  OptimizationResult out;
  out.r_star = static_cast<double>(r_star);
  out.alpha_star = static_cast<double>(alpha_star);
  out.c_star = static_cast<double>(std::max(
      interior.value, detail::ratio_boundary_pi_half_t<T>(r_star, alpha_star)));
  out.beta_interior = static_cast<double>(interior.beta);
  out.trace = std::move(trace);
  return out;
}

}  // namespace

NarrowingSteps narrow_box_steps(double target_c) {
  if (!std::isfinite(target_c) || !(target_c > 1.0)) {
    throw std::invalid_argument("narrow_box: invalid target");
  }
  NarrowingSteps s;
  // The boundary ratio at beta = pi/2 is at least 9/cos(alpha) for every r.
  const double c = 9.0 / target_c;
  if (c >= 1.0) throw InfeasibleTarget("narrow_box: target at or below 9 is unreachable");
  s.alpha_hi = std::acos(c);
  // Unfolding the whole path against an almost horizontal ray forces
  // 1/sin(alpha) below the target.
  s.alpha_lo_unfold = std::asin(1.0 / target_c);
  if (s.alpha_lo_unfold >= s.alpha_hi) {
    throw InfeasibleTarget("narrow_box: alpha interval empty");
  }
  s.r_hi = target_c * std::sin(2 * s.alpha_hi) - 1.0;
  s.r_lo_first = boundary_r_lower(target_c, s.alpha_lo_unfold);
  const double arg = (s.r_lo_first + 1.0) / target_c;
  if (arg >= 1.0) throw InfeasibleTarget("narrow_box: beta = alpha bound empty");
  s.alpha_lo = std::asin(arg) / 2;
  s.r_lo = boundary_r_lower(target_c, s.alpha_lo);
  if (!(s.r_lo < s.r_hi) || !(s.alpha_lo < s.alpha_hi)) {
    throw InfeasibleTarget("narrow_box: box empty");
  }
  s.box = {s.r_lo, s.r_hi, s.alpha_lo, s.alpha_hi};
  return s;
}

ParamBox narrow_box(double target_c) { return narrow_box_steps(target_c).box; }

double balance_alpha(double r, double tol) {
  if (!(r > 1.0)) throw std::invalid_argument("balance_alpha: r must exceed 1");
  if (!(tol > 0.0)) throw std::invalid_argument("balance_alpha: tol must be positive");
  return balance_alpha_t<double>(r, tol);
}

OptimizationResult optimize(double tol, double target_c, Precision precision) {
  if (!(tol >= 1e-9)) throw std::invalid_argument("optimize: tol must be >= 1e-9");
  if (precision == Precision::Extended) {
    return optimize_t<long double>(tol, target_c);
  }
  return optimize_t<double>(tol, target_c);
}

}  // namespace raysearch
