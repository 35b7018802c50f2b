#pragma once

#include <cmath>
#include <functional>

#include <infoconc/errors.hpp>

namespace infoconc::detail {

// Solves f(x) = target for a strictly increasing smooth f on [lo, hi] by
// bracketed bisection followed by Newton polishing with the supplied
// derivative.  The caller guarantees f(lo) <= target <= f(hi).
inline double solve_increasing(const std::function<double(double)>& f,
                               const std::function<double(double)>& df,
                               double lo, double hi, double target,
                               double residual_tol = 1e-13) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0) {
    throw SolverError("root bracket is invalid");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  const double scale = std::max(1.0, std::abs(target));
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid) - target;
    if (std::abs(fm) <= residual_tol * scale) break;
    if (fm < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4.0 * std::abs(mid) * 1e-16) break;
  }
  // Newton polish, kept inside the bracket.
  for (int it = 0; it < 2; ++it) {
    const double slope = df(mid);
    if (!(slope > 0.0)) break;
    const double step = (f(mid) - target) / slope;
    const double next = mid - step;
    if (next <= lo || next >= hi) break;
    mid = next;
  }
  return mid;
}

}  // namespace infoconc::detail
