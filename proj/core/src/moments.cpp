#include <infoconc/moments.hpp>

#include <cmath>
#include <cstdio>
#include <limits>

#include "special_functions.hpp"

namespace infoconc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MomentRegime regime_of(double s) {
  if (s > 0.0) return MomentRegime::SPositive;
  if (s < 0.0) return MomentRegime::SNegative;
  return MomentRegime::SZero;
}

double checked_log(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw SolverError(std::string("integral of ") + what +
                      " is not finite and positive");
  }
  return std::log(value);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (!(lo < hi)) throw DomainError("grid needs lo < hi");
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + step * i;
  return grid;
}

MomentCurve scalar_moment_curve(const ScalarSConcaveFn& phi,
                                const std::vector<double>& grid,
                                const QuadratureOptions& opts, bool validate) {
  if (grid.empty()) throw DomainError("empty moment grid");
  if (validate && !check_s_concavity(phi)) {
    throw DomainError("phi fails its declared s-concavity on the check grid");
  }
  const double s = phi.s;
  MomentCurve curve;
  curve.grid = grid;
  curve.logm.reserve(grid.size());
  curve.regime = regime_of(s);
  if (s > 0.0) {
    curve.normalizer = "beta(p, 1/s+1), s=" + fmt(s);
  } else if (s < 0.0) {
    curve.normalizer = "beta(p, -1/s-p), s=" + fmt(s);
  } else {
    curve.normalizer = "gamma(p)";
  }

  const double upper = std::isfinite(phi.support_end) ? phi.support_end : kInf;
  for (double p : grid) {
    if (!(p > 0.0)) throw DomainError("moment grid requires p > 0");
    if (s < 0.0 && !(p < -1.0 / s)) {
      throw DomainError("for s < 0 the moment grid requires p < -1/s");
    }
    // Evaluated in log space: the factors t^{p-1} and phi(t) can individually
    // overflow/underflow at the extreme abscissas of the rule even when their
    // product is tame.  A log-space evaluator avoids the underflow entirely;
    // otherwise log(phi) is taken of the plain value.
    auto integrand = [&phi, p](double t) {
      double lphi;
      if (phi.log_value) {
        lphi = phi.log_value(t);
      } else {
        const double pv = phi.value(t);
        lphi = pv > 0.0 ? std::log(pv) : -std::numeric_limits<double>::infinity();
      }
      if (lphi == -std::numeric_limits<double>::infinity()) return 0.0;
      return std::exp((p - 1.0) * std::log(t) + lphi);
    };
    const double raw = integrate(integrand, 0.0, upper, opts);
    double log_norm;
    if (s > 0.0) {
      log_norm = detail::log_beta(p, 1.0 / s + 1.0);
    } else if (s < 0.0) {
      log_norm = detail::log_beta(p, -1.0 / s - p);
    } else {
      log_norm = std::lgamma(p);
    }
    curve.logm.push_back(checked_log(raw, "t^{p-1} phi(t)") - log_norm);
  }
  return curve;
}

double log_pow_integral(const Family& f, double p,
                        const QuadratureOptions& opts) {
  return std::visit(
      [p, &opts](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily>) {
          const int n = fam.params().n();
          const double bp = fam.params().beta() * p;
          const double a = fam.scale();
          if (!(bp > n)) {
            throw DomainError("pareto power integral requires beta p > n");
          }
          // Substitution to the radial sum s = x_1 + ... + x_n.
          auto g = [n, bp, a](double t) {
            return std::exp((n - 1) * std::log(t) - bp * std::log(a + t));
          };
          const double raw = integrate(g, 0.0, kInf, opts);
          return checked_log(raw, "pareto shape^p") - std::lgamma(n);
        } else if constexpr (std::is_same_v<T, HomogeneousFamily>) {
          const int n = fam.dimension();
          const double s = fam.s();
          if (!(p > std::max(0.0, -n * s))) {
            throw DomainError("power integral requires p > max(0, -n s)");
          }
          // Level-set form: integral shape^p = C_U p int_0^1 t^{p-1} l(t) dt
          // with l(t) = ((1-t^s)/s)^n the normalized level-set volume.
          // Log-space keeps the t -> 0 blowup of l (s < 0) from overflowing.
          auto g = [n, s, p](double t) {
            const double w =
                s == 0.0 ? -std::log(t) : (1.0 - std::pow(t, s)) / s;
            if (!(w > 0.0)) return 0.0;
            return std::exp((p - 1.0) * std::log(t) + n * std::log(w));
          };
          const double raw = integrate(g, 0.0, 1.0, opts);
          return fam.log_c_u() + std::log(p) +
                 checked_log(raw, "homogeneous level sets");
        } else if constexpr (std::is_same_v<T, StudentFamily>) {
          const int n = fam.params().n();
          const double c = fam.params().beta() * p;
          if (!(c > 0.5 * n)) {
            throw DomainError("student power integral requires beta p > n/2");
          }
          auto g = [n, c](double r) {
            return std::exp((n - 1) * std::log(r) - c * std::log1p(r * r));
          };
          const double log_nv = std::log(static_cast<double>(n)) +
                                unit_lq_ball_log_volume(n, NormKind::L2);
          return log_nv + checked_log(integrate(g, 0.0, kInf, opts),
                                      "student shape^p");
        } else {
          const int n = fam.dimension();
          if (!(p > 0.0)) throw DomainError("power integral requires p > 0");
          auto g = [n, p](double r) {
            return std::exp((n - 1) * std::log(r) - 0.5 * p * r * r);
          };
          const double log_nv = std::log(static_cast<double>(n)) +
                                unit_lq_ball_log_volume(n, NormKind::L2);
          return log_nv + checked_log(integrate(g, 0.0, kInf, opts),
                                      "gaussian shape^p");
        }
      },
      f);
}

double log_pow_integral_closed_form(const Family& f, double p) {
  return std::visit(
      [p](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily>) {
          const int n = fam.params().n();
          const double bp = fam.params().beta() * p;
          if (!(bp > n)) {
            throw DomainError("pareto power integral requires beta p > n");
          }
          return (n - bp) * std::log(fam.scale()) +
                 detail::log_beta(n, bp - n) - std::lgamma(n);
        } else if constexpr (std::is_same_v<T, HomogeneousFamily>) {
          return fam.log_shape_integral(p);
        } else if constexpr (std::is_same_v<T, StudentFamily>) {
          return fam.log_shape_integral(fam.params().beta() * p);
        } else {
          if (!(p > 0.0)) throw DomainError("power integral requires p > 0");
          const int n = fam.dimension();
          return 0.5 * n * (std::log(2.0 * M_PI) - std::log(p));
        }
      },
      f);
}

MomentCurve density_moment_curve(const Family& f, double s,
                                 const std::vector<double>& grid,
                                 const QuadratureOptions& opts) {
  if (grid.empty()) throw DomainError("empty moment grid");
  const int n = dimension(f);
  MomentCurve curve;
  curve.grid = grid;
  curve.logm.reserve(grid.size());
  curve.regime = regime_of(s);
  curve.normalizer = "(p+s)...(p+ns), s=" + fmt(s);

  for (double p : grid) {
    if (!(p > std::max(0.0, -n * s))) {
      throw DomainError("moment grid requires p > max(0, -n s)");
    }
    double factor = 0.0;
    for (int i = 1; i <= n; ++i) factor += std::log(p + i * s);
    curve.logm.push_back(factor + log_pow_integral(f, p, opts));
  }
  return curve;
}

ConcavityCertificate certify_log_concavity(const MomentCurve& curve,
                                           double tolerance) {
  const auto& grid = curve.grid;
  const auto& logm = curve.logm;
  if (grid.size() < 3) throw DomainError("certification needs >= 3 points");
  if (grid.size() != logm.size()) {
    throw DomainError("curve grid/value size mismatch");
  }
  const double h = grid[1] - grid[0];
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (std::abs(grid[i + 1] - grid[i] - h) > 1e-6 * std::abs(h)) {
      throw DomainError("certification requires a uniform grid");
    }
  }
  for (double v : logm) {
    if (!std::isfinite(v)) throw DomainError("curve has non-finite entries");
  }

  ConcavityCertificate cert;
  cert.tolerance = tolerance;
  cert.worst = -kInf;
  for (std::size_t i = 1; i + 1 < logm.size(); ++i) {
    const double dd = logm[i + 1] - 2.0 * logm[i] + logm[i - 1];
    if (dd > cert.worst) {
      cert.worst = dd;
      cert.worst_index = i;
      cert.worst_p = grid[i];
    }
  }
  cert.pass = cert.worst <= tolerance;
  return cert;
}

std::string moment_curve_csv(const MomentCurve& curve) {
  std::string out = "p,logM,second_difference\n";
  char buf[96];
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    if (i > 0 && i + 1 < curve.grid.size()) {
      const double dd =
          curve.logm[i + 1] - 2.0 * curve.logm[i] + curve.logm[i - 1];
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", curve.grid[i],
                    curve.logm[i], dd);
    } else {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,\n", curve.grid[i],
                    curve.logm[i]);
    }
    out += buf;
  }
  return out;
}

}  // namespace infoconc
