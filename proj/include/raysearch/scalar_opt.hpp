#pragma once

#include <cmath>
#include <utility>

#include "raysearch/errors.hpp"

namespace raysearch {

/// Golden-section maximization of a unimodal function on [lo, hi].
/// Returns the abscissa of the maximum to absolute tolerance xtol.
template <class T, class F>
std::pair<T, T> golden_max(F&& f, T lo, T hi, T xtol, int max_iter = 400) {
  const T inv_phi = (std::sqrt(T(5)) - 1) / 2;
  T a = lo, b = hi;
  T c = b - inv_phi * (b - a);
  T d = a + inv_phi * (b - a);
  T fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && b - a > xtol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const T x = (a + b) / 2;
  return {x, f(x)};
}

template <class T, class F>
std::pair<T, T> golden_min(F&& f, T lo, T hi, T xtol, int max_iter = 400) {
  auto neg = [&f](T x) { return -f(x); };
  auto [x, v] = golden_max<T>(neg, lo, hi, xtol, max_iter);
  return {x, -v};
}

/// Bisection for the root of a function that is positive at lo and negative
/// at hi.  Stops when |f| < ftol or the interval is resolved to machine
/// precision.
template <class T, class F>
T bisect_sign_change(F&& f, T lo, T hi, T ftol, int max_iter = 200) {
  T flo = f(lo), fhi = f(hi);
  if (!(flo > 0) || !(fhi < 0)) {
    throw BracketFailure("bisect: no sign change over the bracket");
  }
  T mid = (lo + hi) / 2;
  for (int it = 0; it < max_iter; ++it) {
    mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const T fm = f(mid);
    if (std::abs(fm) < ftol) return mid;
    if (fm > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace raysearch
