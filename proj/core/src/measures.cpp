#include <infoconc/measures.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace infoconc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

double log_beta_fn(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

void require_dimension(std::size_t got, int want) {
  if (got != static_cast<std::size_t>(want)) {
    throw DomainError("point dimension does not match the family dimension");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

double lq_norm(std::span<const double> x, NormKind q) {
  double r = 0.0;
  switch (q) {
    case NormKind::L1:
      for (double xi : x) r += std::abs(xi);
      return r;
    case NormKind::L2:
      for (double xi : x) r += xi * xi;
      return std::sqrt(r);
    case NormKind::LInf:
      for (double xi : x) r = std::max(r, std::abs(xi));
      return r;
  }
  return r;
}

double unit_lq_ball_log_volume(int n, NormKind q) {
  if (n < 1) throw DomainError("dimension must be positive");
  switch (q) {
    case NormKind::L1:
      return n * std::log(2.0) - std::lgamma(n + 1.0);
    case NormKind::L2:
      return 0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n + 1.0);
    case NormKind::LInf:
      return n * std::log(2.0);
  }
  return 0.0;
}

const char* norm_kind_name(NormKind q) {
  switch (q) {
    case NormKind::L1: return "1";
    case NormKind::L2: return "2";
    case NormKind::LInf: return "inf";
  }
  return "?";
}

// ---------------------------------------------------------------- Pareto --

ParetoFamily::ParetoFamily(ConvexParams params, double scale)
    : params_(params), scale_(scale) {
  if (!(scale > 0.0)) throw DomainError("pareto scale a must be positive");
  const int n = params_.n();
  const double beta = params_.beta();
  log_z_ = (n - beta) * std::log(scale) + log_beta_fn(n, beta - n) -
           std::lgamma(n);
}

double ParetoFamily::log_density(std::span<const double> x) const {
  require_dimension(x.size(), params_.n());
  double sum = 0.0;
  for (double xi : x) {
    if (xi < 0.0) return -kInf;
    sum += xi;
  }
  return -log_z_ - params_.beta() * std::log(scale_ + sum);
}

double ParetoFamily::max_density() const {
  return std::exp(-log_z_ - params_.beta() * std::log(scale_));
}

double ParetoFamily::entropy() const {
  const double log_max = -log_z_ - params_.beta() * std::log(scale_);
  return -log_max + params_.beta() * params_.sum_inv();
}

// ----------------------------------------------------------- homogeneous --

HomogeneousFamily::HomogeneousFamily(int n, double s, NormKind q,
                                     double norm_scale)
    : n_(n), s_(s), q_(q), scale_(norm_scale) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (!(norm_scale > 0.0)) throw DomainError("norm scale must be positive");
  // Integrability of the shape itself needs 1 > -n s.
  if (!(s > -1.0 / n)) {
    throw DomainError("homogeneous family requires s > -1/n");
  }
  log_c_u_ = -n * std::log(scale_) + unit_lq_ball_log_volume(n, q);
}

double HomogeneousFamily::u(std::span<const double> x) const {
  require_dimension(x.size(), n_);
  return scale_ * lq_norm(x, q_);
}

double HomogeneousFamily::log_shape(std::span<const double> x) const {
  const double uu = u(x);
  if (s_ == 0.0) return -uu;
  const double arg = 1.0 - s_ * uu;
  if (arg <= 0.0) return -kInf;  // boundary {U = 1/s} included here
  return std::log(arg) / s_;
}

double HomogeneousFamily::log_density(std::span<const double> x) const {
  return log_shape(x) - log_shape_integral(1.0);
}

double HomogeneousFamily::log_shape_integral(double p) const {
  if (!(p > std::max(0.0, -n_ * s_))) {
    throw DomainError("shape integral requires p > max(0, -n s)");
  }
  double sum_logs = 0.0;
  for (int i = 1; i <= n_; ++i) sum_logs += std::log(p + i * s_);
  return log_c_u_ + std::lgamma(n_ + 1.0) - sum_logs;
}

double HomogeneousFamily::max_density() const {
  return std::exp(-log_shape_integral(1.0));
}

double HomogeneousFamily::entropy() const {
  if (n_ > 3) throw DomainError("entropy quadrature path limited to n <= 3");
  const double log_i1 = log_shape_integral(1.0);
  // integral of shape * log(shape) over R^n, via the layer-cake identity
  // |{U <= u}| = C_U u^n.
  const double upper = s_ > 0.0 ? 1.0 / s_ : kInf;
  auto integrand = [this](double uu) {
    const double lphi = s_ == 0.0 ? -uu : std::log1p(-s_ * uu) / s_;
    // At the support boundary (and past double range) the true value is 0;
    // returning it directly avoids 0 * inf at the rule's extreme abscissas.
    if (!std::isfinite(lphi)) return 0.0;
    const double lw = (n_ == 1 ? 0.0 : (n_ - 1) * std::log(uu)) + lphi;
    return std::exp(lw) * lphi;
  };
  const double raw = integrate(integrand, 0.0, upper);
  const double weighted = n_ * std::exp(log_c_u_) * raw;
  return log_i1 - weighted / std::exp(log_i1);
}

// --------------------------------------------------------------- student --

StudentFamily::StudentFamily(ConvexParams params) : params_(params) {
  log_z_ = log_shape_integral(params_.beta());
}

double StudentFamily::log_shape_integral(double c) const {
  const int n = params_.n();
  if (!(c > 0.5 * n)) {
    throw DomainError("student shape integral requires exponent > n/2");
  }
  return 0.5 * n * std::log(M_PI) + std::lgamma(c - 0.5 * n) - std::lgamma(c);
}

double StudentFamily::log_density(std::span<const double> x) const {
  require_dimension(x.size(), params_.n());
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return -log_z_ - params_.beta() * std::log1p(r2);
}

double StudentFamily::max_density() const { return std::exp(-log_z_); }

double StudentFamily::entropy() const {
  const int n = params_.n();
  if (n > 3) throw DomainError("entropy quadrature path limited to n <= 3");
  const double beta = params_.beta();
  const double log_nv = std::log(static_cast<double>(n)) +
                        unit_lq_ball_log_volume(n, NormKind::L2);
  auto integrand = [n, beta](double r) {
    const double w = std::log1p(r * r);
    if (!std::isfinite(w)) return 0.0;  // r^2 past double range: true value 0
    const double le = (n == 1 ? 0.0 : (n - 1) * std::log(r)) - beta * w;
    return std::exp(le) * w;
  };
  const double mean_log = std::exp(log_nv - log_z_) *
                          integrate(integrand, 0.0, kInf);
  return log_z_ + beta * mean_log;
}

// -------------------------------------------------------------- gaussian --

GaussianFamily::GaussianFamily(int n) : n_(n) {
  if (n < 1) throw DomainError("dimension must be positive");
}

double GaussianFamily::log_density(std::span<const double> x) const {
  require_dimension(x.size(), n_);
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return -0.5 * r2 - 0.5 * n_ * kLog2Pi;
}

double GaussianFamily::max_density() const {
  return std::exp(-0.5 * n_ * kLog2Pi);
}

double GaussianFamily::entropy() const { return 0.5 * n_ * (1.0 + kLog2Pi); }

// -------------------------------------------------------------- dispatch --

int dimension(const Family& f) {
  return std::visit(
      [](const auto& fam) -> int {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily> ||
                      std::is_same_v<T, StudentFamily>) {
          return fam.params().n();
        } else {
          return fam.dimension();
        }
      },
      f);
}

std::string family_id(const Family& f) {
  return std::visit(
      [](const auto& fam) -> std::string {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily>) {
          return "pareto(n=" + std::to_string(fam.params().n()) +
                 ",beta=" + format_double(fam.params().beta()) +
                 ",a=" + format_double(fam.scale()) + ")";
        } else if constexpr (std::is_same_v<T, HomogeneousFamily>) {
          return "homogeneous(n=" + std::to_string(fam.dimension()) +
                 ",s=" + format_double(fam.s()) +
                 ",q=" + norm_kind_name(fam.norm_kind()) +
                 ",c=" + format_double(fam.norm_scale()) + ")";
        } else if constexpr (std::is_same_v<T, StudentFamily>) {
          return "student(n=" + std::to_string(fam.params().n()) +
                 ",beta=" + format_double(fam.params().beta()) + ")";
        } else {
          return "gaussian(n=" + std::to_string(fam.dimension()) + ")";
        }
      },
      f);
}

double natural_concavity(const Family& f) {
  return std::visit(
      [](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily> ||
                      std::is_same_v<T, StudentFamily>) {
          return -1.0 / fam.params().beta();
        } else if constexpr (std::is_same_v<T, HomogeneousFamily>) {
          return fam.s();
        } else {
          return 0.0;
        }
      },
      f);
}

double log_density(const Family& f, std::span<const double> x) {
  return std::visit([x](const auto& fam) { return fam.log_density(x); }, f);
}

double information_content(const Family& f, std::span<const double> x) {
  const double ld = log_density(f, x);
  if (ld == -kInf) {
    throw DomainError(
        "point outside the support: information content is infinite");
  }
  return -ld;
}

double max_density(const Family& f) {
  return std::visit([](const auto& fam) { return fam.max_density(); }, f);
}

double exact_entropy(const Family& f) {
  return std::visit([](const auto& fam) { return fam.entropy(); }, f);
}

// ---------------------------------------------------- scalar test inputs --

ScalarSConcaveFn reference_scalar_fn(double s) {
  ScalarSConcaveFn fn;
  fn.s = s;
  fn.label = "phi_s(s=" + format_double(s) + ")";
  if (s == 0.0) {
    fn.value = [](double t) { return std::exp(-t); };
    fn.log_value = [](double t) { return -t; };
    fn.support_end = kInf;
  } else {
    fn.log_value = [s](double t) {
      const double arg = 1.0 - s * t;
      return arg > 0.0 ? std::log(arg) / s : -kInf;
    };
    fn.value = [s](double t) {
      const double arg = 1.0 - s * t;
      return arg > 0.0 ? std::pow(arg, 1.0 / s) : 0.0;
    };
    fn.support_end = s > 0.0 ? 1.0 / s : kInf;
  }
  return fn;
}

bool check_s_concavity(const ScalarSConcaveFn& fn, int grid_points,
                       double tol) {
  if (grid_points < 3) throw DomainError("need at least 3 grid points");
  double hi = fn.support_end;
  if (std::isinf(hi)) {
    // Scan out to where phi has decayed away.
    const double phi0 = fn.value(0.0);
    hi = 1.0;
    while (fn.value(hi) > 1e-12 * phi0 && hi < 1e6) hi *= 2.0;
  }
  const double h = hi / (grid_points + 1);
  std::vector<double> g(grid_points);
  std::vector<bool> ok(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double t = h * (i + 1);
    const double phi = fn.value(t);
    ok[i] = phi > 0.0;
    if (!ok[i]) continue;
    g[i] = fn.s == 0.0 ? std::log(phi) : std::pow(phi, fn.s);
  }
  double scale = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    if (ok[i]) scale = std::max(scale, std::abs(g[i]));
  }
  const double slack = tol * std::max(1.0, scale);
  for (int i = 1; i + 1 < grid_points; ++i) {
    if (!(ok[i - 1] && ok[i] && ok[i + 1])) continue;
    const double dd = g[i + 1] - 2.0 * g[i] + g[i - 1];
    // phi^s concave for s > 0, convex for s < 0, log phi concave at s = 0.
    if (fn.s < 0.0 ? dd < -slack : dd > slack) return false;
  }
  return true;
}

}  // namespace infoconc
