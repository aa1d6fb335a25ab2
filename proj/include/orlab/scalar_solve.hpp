#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace orlab {

/// Smallest x >= 0 where a monotone predicate flips to true, located by
/// geometric bracket expansion plus bisection. `pred(lo)` must be false (or
/// lo == 0 with pred(0) false by convention); plateaus resolve to the flip
/// point, i.e. the infimum of the true set.
inline double bisect_threshold(const std::function<bool(double)>& pred,
                               double hi_start = 1.0,
                               double hi_cap = 1e280,
                               double rel_tol = 1e-13,
                               int max_iters = 240) {
  double hi = hi_start;
  while (!pred(hi)) {
    hi *= 2.0;
    if (hi > hi_cap) return hi;  // never flips inside the search range
  }
  double lo = 0.0;
  for (int i = 0; i < max_iters && (hi - lo) > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Golden-section maximum of a function on [a, b]. The objective may return
/// -inf (outside a finiteness region); it must be unimodal where finite.
inline double golden_max(const std::function<double(double)>& obj,
                         double a, double b, int iters = 160) {
  constexpr double phi = 0.6180339887498949;  // (sqrt(5)-1)/2
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = obj(x1);
  double f2 = obj(x2);
  for (int i = 0; i < iters && (b - a) > 1e-15 * (std::fabs(a) + std::fabs(b) + 1.0); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = obj(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = obj(x1);
    }
  }
  return std::max(f1, f2);
}

/// Abscissa of the golden-section maximum (same contract as golden_max).
inline double golden_argmax(const std::function<double(double)>& obj,
                            double a, double b, int iters = 160) {
  constexpr double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = obj(x1);
  double f2 = obj(x2);
  for (int i = 0; i < iters && (b - a) > 1e-15 * (std::fabs(a) + std::fabs(b) + 1.0); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = obj(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = obj(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

/// Geometric grid over [lo, hi], endpoints included.
inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    g.push_back(lo);
    return g;
  }
  const double la = std::log(lo);
  const double lb = std::log(hi);
  for (int i = 0; i < n; ++i) {
    g.push_back(std::exp(la + (lb - la) * i / (n - 1)));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace orlab
