#include <infoconc/bounds.hpp>

#include <cmath>

#include "monotone_solver.hpp"

namespace infoconc {

DeviationProfile::DeviationProfile(ConvexParams params) : params_(params) {
  c_at_zero_ = 0.0;
  c_prime_at_zero_ = 0.0;
  const int n = params_.n();
  const double beta = params_.beta();
  for (int i = 1; i <= n; ++i) {
    c_at_zero_ -= std::log(beta - i);
    c_prime_at_zero_ += beta / (beta - i);
  }
}

void DeviationProfile::require_admissible(double alpha) const {
  if (!(alpha < alpha_max())) {
    throw DomainError("alpha must lie below 1 - n/beta");
  }
}

double DeviationProfile::c(double alpha) const {
  require_admissible(alpha);
  const int n = params_.n();
  const double beta = params_.beta();
  double v = 0.0;
  for (int i = 1; i <= n; ++i) v -= std::log((1.0 - alpha) * beta - i);
  return v;
}

double DeviationProfile::c_prime(double alpha) const {
  require_admissible(alpha);
  const int n = params_.n();
  const double beta = params_.beta();
  double v = 0.0;
  for (int i = 1; i <= n; ++i) v += beta / ((1.0 - alpha) * beta - i);
  return v;
}

double DeviationProfile::c_second(double alpha) const {
  require_admissible(alpha);
  const int n = params_.n();
  const double beta = params_.beta();
  double v = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double d = (1.0 - alpha) * beta - i;
    v += beta * beta / (d * d);
  }
  return v;
}

double DeviationProfile::psi(double alpha) const {
  return c(alpha) - c_at_zero_ - c_prime_at_zero_ * alpha;
}

double DeviationProfile::psi_prime(double alpha) const {
  return c_prime(alpha) - c_prime_at_zero_;
}

double DeviationProfile::psi_second(double alpha) const {
  return c_second(alpha);
}

double psi_c(const ConvexParams& params, double alpha) {
  return DeviationProfile(params).psi(alpha);
}

double log_mgf_normalized(const ConvexParams& params, double alpha) {
  return psi_c(params, alpha);
}

double varentropy_bound(const ConvexParams& params) {
  const double beta = params.beta();
  return beta * beta * params.sum_inv_sq();
}

double fisher_varentropy_bound(const ConvexParams& params, double trace_sigma,
                               double fisher_info) {
  if (!(params.beta() > params.n() + 2)) {
    throw DomainError(
        "fisher varentropy bound requires beta > n + 2 (finite covariance)");
  }
  if (!(trace_sigma > 0.0)) throw DomainError("tr(Sigma) must be positive");
  if (!(fisher_info >= 0.0)) {
    throw DomainError("Fisher information must be nonnegative");
  }
  const double beta = params.beta();
  const double n = params.n();
  return trace_sigma * beta * beta / (n * n) * params.sum_inv_sq() *
         fisher_info;
}

double entropy_upper_bound(const ConvexParams& params, double max_density) {
  if (!(max_density > 0.0)) throw DomainError("||f||_inf must be positive");
  return -std::log(max_density) + entropy_gap(params);
}

double entropy_gap(const ConvexParams& params) {
  return params.beta() * params.sum_inv();
}

SmallBallResult small_ball(const ConvexParams& params, double c0) {
  if (!(c0 > 0.0 && c0 < 1.0)) throw DomainError("c0 must lie in (0, 1)");
  const double gap = entropy_gap(params);
  const double target = -params.n() * std::log(c0);
  if (!(target > gap)) {
    throw DomainError(
        "c0 too large: need n log c0 < -beta sum (beta-i)^{-1}");
  }

  // c' is strictly increasing on (0, alpha_max) from `gap` to +inf, so the
  // root equation c'(a*) = -n log c0 has exactly one solution.
  const DeviationProfile profile(params);
  const double a_hi = params.alpha_max() * (1.0 - 1e-12);
  const double alpha_star = detail::solve_increasing(
      [&profile](double a) { return profile.c_prime(a); },
      [&profile](double a) { return profile.c_second(a); }, 0.0, a_hi, target);

  const int n = params.n();
  const double beta = params.beta();
  double log_ratio = 0.0;  // log prod (beta-i)/((1-a*)beta-i)
  for (int i = 1; i <= n; ++i) {
    log_ratio += std::log(beta - i) - std::log((1.0 - alpha_star) * beta - i);
  }
  SmallBallResult out;
  out.c0 = c0;
  out.alpha_star = alpha_star;
  out.c1 = std::exp(alpha_star * std::log(c0) + log_ratio / n);
  out.t = target - gap;
  return out;
}

}  // namespace infoconc
