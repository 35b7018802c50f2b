#pragma once

#include <infoconc/errors.hpp>

namespace infoconc {

// Parameters of a convex (kappa-concave, kappa < 0) density on R^n whose
// density is -1/beta-concave, beta = n - 1/kappa.  Every closed-form bound in
// this library is a function of (n, beta); all of them require beta > n.
//
// Operations with stronger needs (e.g. beta > n + 2 for the Fisher variant)
// check separately.
class ConvexParams {
 public:
  ConvexParams(int n, double beta) : n_(n), beta_(beta) {
    if (n < 1) throw DomainError("dimension n must be a positive integer");
    if (!(beta > n)) throw DomainError("beta must exceed n");
  }

  int n() const { return n_; }
  double beta() const { return beta_; }

  // kappa = -1/(beta - n), negative and finite for beta > n.
  double kappa() const { return -1.0 / (beta_ - n_); }

  // The density itself is s-concave with s = -1/beta.
  double density_concavity() const { return -1.0 / beta_; }

  // Supremum of the admissible MGF argument: E f^{-alpha}(X) is finite for
  // alpha < 1 - n/beta.
  double alpha_max() const { return 1.0 - static_cast<double>(n_) / beta_; }

  // sum_{i=1}^{n} (beta - i)^{-1}, by direct summation (n is small).
  double sum_inv() const {
    double s = 0.0;
    for (int i = 1; i <= n_; ++i) s += 1.0 / (beta_ - i);
    return s;
  }

  // sum_{i=1}^{n} (beta - i)^{-2}
  double sum_inv_sq() const {
    double s = 0.0;
    for (int i = 1; i <= n_; ++i) {
      const double d = beta_ - i;
      s += 1.0 / (d * d);
    }
    return s;
  }

  bool operator==(const ConvexParams&) const = default;

 private:
  int n_;
  double beta_;
};

}  // namespace infoconc
