#include <infoconc/legendre.hpp>

#include <cmath>
#include <limits>

#include <infoconc/bounds.hpp>
#include "monotone_solver.hpp"

namespace infoconc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* tail_side_name(TailSide side) {
  return side == TailSide::Upper ? "upper" : "lower";
}

double lower_infinity_threshold(const ConvexParams& params) {
  return entropy_gap(params);
}

TailExponent dual_upper(const ConvexParams& params, double t) {
  if (!(t > 0.0)) throw DomainError("deviation level t must be positive");
  const DeviationProfile profile(params);
  const double guard = params.alpha_max() * (1.0 - 1e-12);

  double alpha_star;
  if (profile.psi_prime(guard) <= t) {
    alpha_star = guard;
  } else {
    alpha_star = detail::solve_increasing(
        [&profile](double a) { return profile.psi_prime(a); },
        [&profile](double a) { return profile.psi_second(a); }, 0.0, guard, t);
  }
  TailExponent out;
  out.t = t;
  out.side = TailSide::Upper;
  out.value = alpha_star * t - profile.psi(alpha_star);
  out.infinite = false;
  out.alpha_star = alpha_star;
  return out;
}

TailExponent dual_lower(const ConvexParams& params, double t) {
  if (!(t > 0.0)) throw DomainError("deviation level t must be positive");
  TailExponent out;
  out.t = t;
  out.side = TailSide::Lower;

  const double threshold = lower_infinity_threshold(params);
  if (t >= threshold) {
    out.value = kInf;
    out.infinite = true;
    return out;
  }

  const DeviationProfile profile(params);
  // psi_c' increases from -threshold (alpha -> -inf) to 0 (alpha = 0), so the
  // stationary equation psi_c'(alpha) = -t brackets once B is large enough.
  double b = 1.0;
  while (profile.psi_prime(-b) >= -t) {
    b *= 2.0;
    if (b > 0x1p100) throw SolverError("lower-dual bracket failed to close");
  }
  const double alpha_star = detail::solve_increasing(
      [&profile](double a) { return profile.psi_prime(a); },
      [&profile](double a) { return profile.psi_second(a); }, -b, 0.0, -t,
      /*residual_tol=*/1e-14);

  out.value = -alpha_star * t - profile.psi(alpha_star);
  out.infinite = false;
  out.alpha_star = alpha_star;
  return out;
}

double tail_bound(const ConvexParams& params, double t, TailSide side) {
  const TailExponent e =
      side == TailSide::Upper ? dual_upper(params, t) : dual_lower(params, t);
  return e.infinite ? 0.0 : std::exp(-e.value);
}

}  // namespace infoconc
