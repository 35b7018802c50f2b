#pragma once

#include <optional>

#include <infoconc/convex_params.hpp>

namespace infoconc {

enum class TailSide { Upper, Lower };

const char* tail_side_name(TailSide side);  // "upper" / "lower"

// Result of evaluating a Fenchel-Legendre dual of the restricted deviation
// profile.  `infinite` is the explicit +inf marker (value is set to the IEEE
// infinity for arithmetic convenience, never produced by overflow); when the
// dual is infinite no maximizer exists and alpha_star is empty.
struct TailExponent {
  double t = 0.0;
  TailSide side = TailSide::Upper;
  double value = 0.0;
  bool infinite = false;
  std::optional<double> alpha_star;
};

// The supremum slope of the lower profile, beta sum (beta-i)^{-1}.
// dual_lower(t) is finite exactly for t below this threshold; at and above
// it the supremum is not attained and the +inf marker is reported (the
// almost-sure lower support of h~ - h).
double lower_infinity_threshold(const ConvexParams& params);

// psi*_{c,+}(t) = sup_{0 < alpha < alpha_max} (alpha t - psi_c(alpha)).
// Finite for every t > 0.  The stationary point solves psi_c'(alpha) = t; it
// is found by bisection on the strictly increasing psi_c' over
// (0, alpha_max - delta) with delta = 1e-12 alpha_max; for astronomically
// large t (beyond psi_c' at the guard, ~1e12) the guard point itself is used.
TailExponent dual_upper(const ConvexParams& params, double t);

// psi*_{c,-}(-t) = sup_{alpha < 0} (-alpha t - psi_c(alpha)); +inf marker for
// t >= lower_infinity_threshold.  The bracket (-B, 0) is grown geometrically
// until it contains the stationary point.
TailExponent dual_lower(const ConvexParams& params, double t);

// e^{-value}; exactly 0 in the infinite regime.
double tail_bound(const ConvexParams& params, double t, TailSide side);

}  // namespace infoconc
