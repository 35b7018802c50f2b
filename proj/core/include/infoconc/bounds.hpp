#pragma once

#include <infoconc/convex_params.hpp>

namespace infoconc {

// The normalizing profile c(alpha) = -sum_i log((1-alpha)beta - i) that makes
// the normalized MGF of the information content log-concave, together with
// the centered deviation function psi_c(alpha) = c(alpha) - c(0) - c'(0)alpha
// and their derivatives.
//
// Everything is defined for alpha < alpha_max = 1 - n/beta; psi_c(0) =
// psi_c'(0) = 0, psi_c'' = c'' > 0, and psi_c blows up at alpha_max.
class DeviationProfile {
 public:
  explicit DeviationProfile(ConvexParams params);

  const ConvexParams& params() const { return params_; }
  double alpha_max() const { return params_.alpha_max(); }

  double c(double alpha) const;
  double c_prime(double alpha) const;   // sum_i beta/((1-alpha)beta - i)
  double c_second(double alpha) const;  // sum_i beta^2/((1-alpha)beta - i)^2

  double psi(double alpha) const;
  double psi_prime(double alpha) const;
  double psi_second(double alpha) const;

 private:
  void require_admissible(double alpha) const;

  ConvexParams params_;
  double c_at_zero_;
  double c_prime_at_zero_;
};

// psi_c(alpha) = -alpha beta sum (beta-i)^{-1} - sum log(((1-alpha)beta-i)/(beta-i)).
// Rejects alpha >= 1 - n/beta with a DomainError.
double psi_c(const ConvexParams& params, double alpha);

// Exponent of the normalized-MGF bound E e^{alpha(h~ - h)} <= e^{psi_c(alpha)};
// identical to psi_c, provided for callers comparing empirical MGFs.
double log_mgf_normalized(const ConvexParams& params, double alpha);

// Sharp bound: Var(h~(X)) <= beta^2 sum_{i=1}^n (beta-i)^{-2}, with equality
// for the Pareto family.  Equals psi_c''(0).
double varentropy_bound(const ConvexParams& params);

// Var(h~(X)) <= tr(Sigma) beta^2/n^2 sum (beta-i)^{-2} J(X).  Needs
// beta > n + 2 so the covariance exists.
double fisher_varentropy_bound(const ConvexParams& params, double trace_sigma,
                               double fisher_info);

// h(X) <= -log ||f||_inf + beta sum (beta-i)^{-1}; equality for Pareto.
double entropy_upper_bound(const ConvexParams& params, double max_density);

// beta sum_{i=1}^n (beta-i)^{-1}: the gap between the Pareto entropy and its
// minimal information content, the supremum slope of the lower deviation
// profile, and the cutoff in the small-ball precondition.
double entropy_gap(const ConvexParams& params);

// P(f(X) >= c0^n ||f||_inf) >= 1 - c1^n for 0 < c0 < 1 with
// n log c0 < -beta sum (beta-i)^{-1}.
struct SmallBallResult {
  double c0;
  double alpha_star;  // root of sum_i beta/((1-a)beta - i) = -n log c0
  double c1;          // c0^{a*} (prod (beta-i)/((1-a*)beta-i))^{1/n}, in (0,1)
  double t;           // the deviation level -n log c0 - beta sum (beta-i)^{-1}
};

SmallBallResult small_ball(const ConvexParams& params, double c0);

}  // namespace infoconc
