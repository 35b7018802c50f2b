#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <infoconc/measures.hpp>
#include <infoconc/quadrature.hpp>

namespace infoconc {

enum class MomentRegime { SPositive, SZero, SNegative };

// A sampled curve p -> log of a normalized moment, used to certify the
// log-concavity statements numerically.  Grids are uniform by construction.
struct MomentCurve {
  std::vector<double> grid;
  std::vector<double> logm;
  MomentRegime regime = MomentRegime::SZero;
  std::string normalizer;  // which normalization produced logm
};

// Uniform grid lo, lo+step, ..., capped at hi (hi included when it lands on
// the lattice).  Default step matches the certification default.
std::vector<double> uniform_grid(double lo, double hi, double step = 0.05);

// Normalized 1-D moment curve of a scalar s-concave function:
//   logM(p) = log [ N(p)^{-1} * integral_0^inf t^{p-1} phi(t) dt ]
// with N(p) = B(p, 1/s + 1) for s > 0, Gamma(p) for s = 0, and
// B(p, -1/s - p) for s < 0 (where the domain is 0 < p < -1/s).
//
// The declared concavity of phi is checked on a 10^3-point grid first, so a
// failed certificate downstream is attributable to the curve rather than the
// input; pass validate = false to study a normalizer on its own.
MomentCurve scalar_moment_curve(const ScalarSConcaveFn& phi,
                                const std::vector<double>& grid,
                                const QuadratureOptions& opts = {},
                                bool validate = true);

// Moment curve of an s-concave family on R^n:
//   logM(p) = sum_{i=1}^n log(p + i s) + log integral f^p,
// for p > max(0, -n s).  The curve is evaluated for the family's canonical
// unnormalized shape; normalizing the density only shifts logM by an affine
// function of p and cannot change its concavity.  The power integral is
// computed by 1-D reduction quadrature (level-set form for the homogeneous
// families, radial or simplex substitution for the others); the closed forms
// are exposed separately as the algebraic cross-check route.
MomentCurve density_moment_curve(const Family& f, double s,
                                 const std::vector<double>& grid,
                                 const QuadratureOptions& opts = {});

// Quadrature route for log integral shape^p (see density_moment_curve).
double log_pow_integral(const Family& f, double p,
                        const QuadratureOptions& opts = {});

// Closed-form route for the same quantity.
double log_pow_integral_closed_form(const Family& f, double p);

struct ConcavityCertificate {
  bool pass = false;
  double tolerance = 0.0;
  // Largest (signed) discrete second difference and where it occurred.
  double worst = 0.0;
  double worst_p = 0.0;
  std::size_t worst_index = 0;
};

// Pass iff every discrete second difference of logm is <= tolerance.
// Requires a uniform grid of at least 3 points.
ConcavityCertificate certify_log_concavity(const MomentCurve& curve,
                                           double tolerance = 1e-7);

// CSV with columns p, logM, second_difference (blank at the two endpoints).
std::string moment_curve_csv(const MomentCurve& curve);

}  // namespace infoconc
