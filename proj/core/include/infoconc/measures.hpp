#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>

#include <infoconc/convex_params.hpp>
#include <infoconc/errors.hpp>
#include <infoconc/quadrature.hpp>

namespace infoconc {

// The homogeneous profiles U are restricted to positive multiples of the
// l_q norms, q in {1, 2, inf}; this keeps every derived constant closed-form
// while still exercising the 1-homogeneity hypothesis.
enum class NormKind { L1, L2, LInf };

double lq_norm(std::span<const double> x, NormKind q);
double unit_lq_ball_log_volume(int n, NormKind q);
const char* norm_kind_name(NormKind q);  // "1", "2", "inf"

// Multivariate Pareto: density Z^{-1} (a + x_1 + ... + x_n)^{-beta} on the
// positive orthant.  The equality case of every deviation bound here.
//
// Z_n(a, beta) = a^{n-beta} B(n, beta-n) / (n-1)!  (validated against
// quadrature in the test suite).
class ParetoFamily {
 public:
  ParetoFamily(ConvexParams params, double scale);

  const ConvexParams& params() const { return params_; }
  double scale() const { return scale_; }

  double log_normalizer() const { return log_z_; }  // log Z_n(a, beta)

  // -inf off the closed positive orthant.  The density argument a + sum x_i
  // is positive everywhere on it, so the orthant boundary itself carries
  // finite values (the maximum sits at the origin).
  double log_density(std::span<const double> x) const;

  double max_density() const;

  // Closed form: -log ||f||_inf + beta sum_{i<=n} (beta-i)^{-1}.
  double entropy() const;

 private:
  ConvexParams params_;
  double scale_;
  double log_z_;
};

// The extremal s-concave family f_{s,U} = (1 - s U)_+^{1/s} (s != 0) or
// e^{-U} (s = 0), with U = norm_scale * ||.||_q.  Its normalized power
// integrals are log-affine in p, which makes it the sharpness witness for
// the moment log-concavity certificates.
class HomogeneousFamily {
 public:
  HomogeneousFamily(int n, double s, NormKind q, double norm_scale = 1.0);

  int dimension() const { return n_; }
  double s() const { return s_; }
  NormKind norm_kind() const { return q_; }
  double norm_scale() const { return scale_; }

  double u(std::span<const double> x) const;

  // log of the unnormalized shape; -inf where 1 - sU <= 0 (s > 0 only).
  double log_shape(std::span<const double> x) const;
  double log_density(std::span<const double> x) const;

  // log |{U <= 1}| = -n log(norm_scale) + log vol(B_q^n).
  double log_c_u() const { return log_c_u_; }

  // Closed form log of integral of shape^p: log C_U + log n! - sum_i log(p + i s),
  // valid for p > max(0, -n s).
  double log_shape_integral(double p) const;

  // Shape peaks at 1 (origin), so ||f||_inf = 1 / integral(shape).
  double max_density() const;

  // Differential entropy by 1-D radial reduction quadrature.
  double entropy() const;

 private:
  int n_;
  double s_;
  NormKind q_;
  double scale_;
  double log_c_u_;
};

// Heavy-tailed spherical family with density proportional to
// (1 + |x|^2)^{-beta}; f^{-1/beta} is convex, so the family is
// -1/beta-concave but not of the extremal f_{s,U} form.  Used as the strict
// inequality witness in the simulations.
class StudentFamily {
 public:
  explicit StudentFamily(ConvexParams params);

  const ConvexParams& params() const { return params_; }

  // log of integral of (1+|x|^2)^{-c} over R^n, c > n/2.
  double log_shape_integral(double c) const;

  double log_normalizer() const { return log_z_; }
  double log_density(std::span<const double> x) const;
  double max_density() const;
  double entropy() const;  // radial quadrature

 private:
  ConvexParams params_;
  double log_z_;
};

// Standard Gaussian on R^n: the beta -> infinity (log-concave) limit used by
// the limiting checks.
class GaussianFamily {
 public:
  explicit GaussianFamily(int n);

  int dimension() const { return n_; }
  double log_density(std::span<const double> x) const;
  double max_density() const;
  double entropy() const;  // n/2 log(2 pi e)

 private:
  int n_;
};

using Family =
    std::variant<ParetoFamily, HomogeneousFamily, StudentFamily, GaussianFamily>;

int dimension(const Family& f);
std::string family_id(const Family& f);

// s such that the family's density is s-concave (-1/beta for the convex
// families, the declared s for f_{s,U}, 0 for the Gaussian).
double natural_concavity(const Family& f);

// log f(x); -inf outside the support.  Throws DomainError on a dimension
// mismatch.
double log_density(const Family& f, std::span<const double> x);

// Information content -log f(x).  A point outside the support has infinite
// information content and is signaled distinctly with a DomainError.
double information_content(const Family& f, std::span<const double> x);

double max_density(const Family& f);

// Differential entropy in nats: closed form where the family has one,
// 1-D reduction quadrature otherwise (n <= 3 enforced on that path).
double exact_entropy(const Family& f);

// A scalar s-concave test function phi: [0, support_end) -> [0, inf).
// log_value is optional; when provided (returning -inf where phi = 0) the
// moment quadrature evaluates t^{p-1} phi(t) in one exponential, which keeps
// heavy-tailed phi (s < 0) from underflowing before the product does.
struct ScalarSConcaveFn {
  double s = 0.0;
  std::function<double(double)> value;
  std::function<double(double)> log_value;  // may be empty
  double support_end = 0.0;                 // +inf allowed
  std::string label;
};

// The reference profile phi_s: (1 - s t)_+^{1/s} for s != 0, e^{-t} for s = 0.
ScalarSConcaveFn reference_scalar_fn(double s);

// Checks the declared concavity regime of phi by discrete second differences
// of phi^s (log phi for s = 0) on a uniform grid over the support, so that a
// failed certificate downstream is attributable to the input.
bool check_s_concavity(const ScalarSConcaveFn& fn, int grid_points = 1000,
                       double tol = 1e-7);

}  // namespace infoconc
