#pragma once

#include <functional>

namespace infoconc {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  // Levels of adaptive refinement; point count roughly doubles per level.
  int max_refinements = 15;
};

// Adaptive integration of f over (a, b).  Either endpoint may be infinite.
// Integrable endpoint singularities (t^{p-1} with small p, power-law decay at
// infinity) are handled; semi-infinite ranges are folded onto (0, 1) before
// the double-exponential rule is applied.
//
// Throws SolverError when the error estimate does not meet the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

}  // namespace infoconc
