#include <infoconc/quadrature.hpp>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include <infoconc/errors.hpp>

namespace infoconc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Piece {
  double value;
  double abs_err;
};

// One double-exponential pass over a finite interval.  The two-argument
// functor form keeps the nodes clear of the endpoints, so integrable
// endpoint singularities never see the endpoint itself.
Piece run_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                    const QuadratureOptions& opts) {
  boost::math::quadrature::tanh_sinh<double> rule(
      static_cast<std::size_t>(opts.max_refinements));
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  auto g = [&f](double x, double /*xc*/) { return f(x); };
  const double value = rule.integrate(g, a, b, opts.rel_tol, &err, &l1, &levels);
  if (!std::isfinite(value)) {
    throw SolverError("quadrature produced a non-finite value");
  }
  return {value, err * std::max(std::abs(value), l1)};
}

// Tail integral of f over (origin + 1, inf) through t = origin + 1/v: the
// decay at infinity becomes an algebraic singularity at v = 0, where the
// rule's nodes are exact.  The two divisions are kept separate so that the
// intermediate stays inside double range when the result does.
Piece run_tail(const std::function<double(double)>& f, double origin,
               const QuadratureOptions& opts) {
  auto g = [&f, origin](double v) {
    const double fv = f(origin + 1.0 / v);
    if (fv == 0.0) return 0.0;
    return fv / v / v;
  };
  return run_tanh_sinh(g, 0.0, 1.0, opts);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (std::isnan(a) || std::isnan(b) || a >= b) {
    throw DomainError("integrate: requires a < b");
  }

  double value = 0.0;
  double abs_err = 0.0;
  auto add = [&value, &abs_err](const Piece& p) {
    value += p.value;
    abs_err += p.abs_err;
  };

  if (a == -kInf && b == kInf) {
    auto mirrored = [&f](double t) { return f(-t); };
    add(run_tanh_sinh(f, 0.0, 1.0, opts));
    add(run_tail(f, 0.0, opts));
    add(run_tanh_sinh(mirrored, 0.0, 1.0, opts));
    add(run_tail(mirrored, 0.0, opts));
  } else if (b == kInf) {
    add(run_tanh_sinh(f, a, a + 1.0, opts));
    add(run_tail(f, a, opts));
  } else if (a == -kInf) {
    auto mirrored = [&f, b](double t) { return f(b - t); };
    add(run_tanh_sinh(mirrored, 0.0, 1.0, opts));
    add(run_tail(mirrored, 0.0, opts));
  } else {
    add(run_tanh_sinh(f, a, b, opts));
  }

  if (abs_err > opts.abs_tol &&
      abs_err > 100.0 * opts.rel_tol * std::abs(value)) {
    throw SolverError("quadrature did not converge to the requested tolerance");
  }
  return value;
}

}  // namespace infoconc
