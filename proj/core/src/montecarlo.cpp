#include <infoconc/montecarlo.hpp>

#include <algorithm>
#include <atomic>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <thread>

#include <infoconc/bounds.hpp>
#include <infoconc/rng.hpp>

namespace infoconc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ------------------------------------------------------------- samplers --

struct Drawer {
  virtual ~Drawer() = default;
  virtual int dim() const = 0;
  virtual void draw(Rng& rng, std::span<double> out) const = 0;
};

struct ParetoDrawer final : Drawer {
  int n;
  double beta;
  double a;

  ParetoDrawer(const ParetoFamily& fam)
      : n(fam.params().n()), beta(fam.params().beta()), a(fam.scale()) {}

  int dim() const override { return n; }

  void draw(Rng& rng, std::span<double> out) const override {
    // Radial sum S = a T/(1-T) with T ~ Beta(n, beta-n) gives the marginal
    // density proportional to s^{n-1}(a+s)^{-beta}; spreading S uniformly
    // over the simplex recovers the joint (a + sum x_i)^{-beta} shape.
    double t = rng.beta(static_cast<double>(n), beta - n);
    while (!(t > 0.0 && t < 1.0)) t = rng.beta(static_cast<double>(n), beta - n);
    const double s = a * t / (1.0 - t);
    rng.simplex_uniform(out);
    for (auto& v : out) v *= s;
  }
};

struct GaussianDrawer final : Drawer {
  int n;
  explicit GaussianDrawer(const GaussianFamily& fam) : n(fam.dimension()) {}
  int dim() const override { return n; }
  void draw(Rng& rng, std::span<double> out) const override {
    for (auto& v : out) v = rng.normal();
  }
};

// Inverse-CDF table for the 1-D Student-type density (1+x^2)^{-beta}/Z:
// 10^4 tan-spaced knots, cumulative masses by fixed Gauss-Kronrod panels in
// the angle variable (the integrand becomes cos^{2 beta - 2}), monotone
// piecewise-linear inversion.  The residual tail mass beyond the last knot
// is below 1e-13 of the half mass and is clipped onto it.
struct StudentTable {
  double half_mass = 0.0;  // Z/2
  std::vector<double> x;
  std::vector<double> cum;

  explicit StudentTable(const StudentFamily& fam) {
    const double beta = fam.params().beta();
    const double z = std::exp(fam.log_normalizer());
    half_mass = 0.5 * z;

    const double tail_target = 1e-13 * half_mass;
    double x_max =
        std::pow((2.0 * beta - 1.0) * tail_target, -1.0 / (2.0 * beta - 1.0));
    x_max = std::max(20.0, x_max);
    const double theta_max = std::atan(x_max);

    const std::size_t intervals = 10000;
    x.resize(intervals + 1);
    cum.resize(intervals + 1);
    x[0] = 0.0;
    cum[0] = 0.0;
    auto integrand = [beta](double theta) {
      return std::pow(std::cos(theta), 2.0 * beta - 2.0);
    };
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    for (std::size_t i = 1; i <= intervals; ++i) {
      const double t0 = theta_max * (i - 1) / intervals;
      const double t1 = theta_max * i / intervals;
      x[i] = std::tan(t1);
      cum[i] = cum[i - 1] + gk::integrate(integrand, t0, t1, 0);
    }
  }

  double invert(double w) const {
    const double target = w * half_mass;
    if (target >= cum.back()) return x.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), target);
    const auto hi = static_cast<std::size_t>(it - cum.begin());
    const double span = cum[hi] - cum[hi - 1];
    const double frac = span > 0.0 ? (target - cum[hi - 1]) / span : 0.0;
    return x[hi - 1] + frac * (x[hi] - x[hi - 1]);
  }
};

struct StudentDrawer final : Drawer {
  std::shared_ptr<const StudentTable> table;
  explicit StudentDrawer(const StudentFamily& fam)
      : table(std::make_shared<const StudentTable>(fam)) {}
  int dim() const override { return 1; }
  void draw(Rng& rng, std::span<double> out) const override {
    const double u = rng.uniform01();
    const double w = std::abs(2.0 * u - 1.0);
    out[0] = (u < 0.5 ? -1.0 : 1.0) * table->invert(w);
  }
};

std::shared_ptr<const Drawer> make_drawer(const Family& f) {
  return std::visit(
      [](const auto& fam) -> std::shared_ptr<const Drawer> {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily>) {
          return std::make_shared<ParetoDrawer>(fam);
        } else if constexpr (std::is_same_v<T, GaussianFamily>) {
          return std::make_shared<GaussianDrawer>(fam);
        } else if constexpr (std::is_same_v<T, StudentFamily>) {
          if (fam.params().n() == 1) return std::make_shared<StudentDrawer>(fam);
          return nullptr;
        } else {
          return nullptr;
        }
      },
      f);
}

// --------------------------------------------------------- chunked runs --

template <class ChunkFn>
void run_chunked(std::uint64_t count, int workers, ChunkFn&& fn) {
  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = c * kChunkSize;
      const std::uint64_t end = std::min(count, begin + kChunkSize);
      fn(c, begin, end);
    }
  };
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::shared_ptr<const Drawer> require_drawer(const Family& f) {
  auto drawer = make_drawer(f);
  if (!drawer) {
    throw DomainError("family has no sampler: " + family_id(f));
  }
  return drawer;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<double> default_alpha_grid(double alpha_sup) {
  return {-2.0, -1.0, -0.5, 0.25 * alpha_sup, 0.5 * alpha_sup};
}

std::vector<double> default_alpha_grid(const ConvexParams& params) {
  return default_alpha_grid(params.alpha_max());
}

std::vector<double> default_t_grid(double varentropy) {
  const double scale = std::sqrt(varentropy);
  return {0.5 * scale, 1.0 * scale, 2.0 * scale, 4.0 * scale, 8.0 * scale};
}

std::vector<double> default_t_grid(const ConvexParams& params) {
  return default_t_grid(varentropy_bound(params));
}

bool has_sampler(const Family& f) { return make_drawer(f) != nullptr; }

std::vector<double> sample_points(const Family& f, std::uint64_t seed,
                                  std::uint64_t count, int workers) {
  const auto drawer = require_drawer(f);
  const int n = drawer->dim();
  std::vector<double> points(count * static_cast<std::uint64_t>(n));
  run_chunked(count, workers,
              [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                Rng rng = Rng::for_chunk(seed, chunk);
                for (std::uint64_t i = begin; i < end; ++i) {
                  drawer->draw(rng, std::span<double>(&points[i * n], n));
                }
              });
  return points;
}

std::vector<double> sample_information_contents(const Family& f,
                                                std::uint64_t seed,
                                                std::uint64_t count,
                                                int workers) {
  const auto drawer = require_drawer(f);
  const int n = drawer->dim();
  std::vector<double> h(count);
  run_chunked(count, workers,
              [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                Rng rng = Rng::for_chunk(seed, chunk);
                std::vector<double> pt(n);
                for (std::uint64_t i = begin; i < end; ++i) {
                  drawer->draw(rng, pt);
                  h[i] = information_content(f, pt);
                }
              });
  return h;
}

SampleReport information_stats(const Family& f, const McOptions& options) {
  if (!has_sampler(f)) {
    throw DomainError("family has no sampler: " + family_id(f));
  }
  if (options.count < 2) throw DomainError("need at least 2 samples");

  // The Gaussian family is the log-concave limit: its MGF domain endpoint is
  // 1 and its varentropy equals the beta -> infinity bound n.
  double alpha_sup = 1.0;
  double var_scale = 0.0;
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily> ||
                      std::is_same_v<T, StudentFamily>) {
          alpha_sup = fam.params().alpha_max();
          var_scale = varentropy_bound(fam.params());
        } else {
          alpha_sup = 1.0;
          var_scale = static_cast<double>(dimension(Family(fam)));
        }
      },
      f);

  SampleReport rep;
  rep.family = family_id(f);
  rep.family_config = family_to_config(f);
  rep.seed = options.seed;
  rep.count = options.count;
  rep.alpha_grid =
      options.alpha_grid.empty() ? default_alpha_grid(alpha_sup) : options.alpha_grid;
  rep.t_grid = options.t_grid.empty() ? default_t_grid(var_scale) : options.t_grid;

  for (double a : rep.alpha_grid) {
    if (!(a <= 0.95 * alpha_sup)) {
      throw DomainError(
          "alpha grid must keep a 5% standoff below the MGF domain endpoint");
    }
  }
  for (double t : rep.t_grid) {
    if (!(t > 0.0)) throw DomainError("t grid entries must be positive");
  }

  rep.entropy_ref = exact_entropy(f);
  const std::vector<double> h = sample_information_contents(
      f, options.seed, options.count, options.workers);
  const auto n_samples = static_cast<double>(h.size());

  double sum = 0.0;
  double min_h = kInf;
  for (double v : h) {
    sum += v;
    min_h = std::min(min_h, v);
  }
  const double mean = sum / n_samples;
  double m2 = 0.0, m4 = 0.0;
  for (double v : h) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  const double mu2 = m2 / n_samples;
  const double mu4 = m4 / n_samples;
  rep.mean_h = mean;
  rep.var_h = m2 / (n_samples - 1.0);
  rep.se_mean = std::sqrt(rep.var_h / n_samples);
  rep.se_var = std::sqrt(std::max(0.0, mu4 - mu2 * mu2) / n_samples);
  rep.min_h = min_h;

  rep.mgf_points.reserve(rep.alpha_grid.size());
  for (double alpha : rep.alpha_grid) {
    double sy = 0.0;
    for (double v : h) sy += std::exp(alpha * (v - mean));
    const double m = sy / n_samples;
    double var_y = 0.0, cov_yh = 0.0;
    for (double v : h) {
      const double y = std::exp(alpha * (v - mean));
      var_y += (y - m) * (y - m);
      cov_yh += (y - m) * (v - mean);
    }
    var_y /= n_samples - 1.0;
    cov_yh /= n_samples - 1.0;
    // Delta-method variance of exp(-alpha mean) * avg exp(alpha h~): the
    // centering at the estimated mean contributes the last two terms.
    const double est_var =
        var_y + alpha * alpha * m * m * mu2 - 2.0 * alpha * m * cov_yh;
    rep.mgf_points.push_back(
        {alpha, m, std::sqrt(std::max(0.0, est_var) / n_samples)});
  }

  rep.tail_freqs.reserve(2 * rep.t_grid.size());
  for (double t : rep.t_grid) {
    std::uint64_t upper = 0, lower = 0;
    for (double v : h) {
      const double dev = v - rep.entropy_ref;
      if (dev > t) ++upper;
      if (dev < -t) ++lower;
    }
    for (TailSide side : {TailSide::Upper, TailSide::Lower}) {
      const double freq =
          static_cast<double>(side == TailSide::Upper ? upper : lower) /
          n_samples;
      const double se = std::sqrt(freq * (1.0 - freq) / n_samples);
      rep.tail_freqs.push_back({t, side, freq, se});
    }
  }
  return rep;
}

bool VerdictTable::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerdictRow& r) { return r.pass; });
}

VerdictTable verify_bounds(const SampleReport& report,
                           const ConvexParams& params) {
  VerdictTable table;
  const bool equality_family = report.family.rfind("pareto", 0) == 0;
  const double v_bound = varentropy_bound(params);

  table.rows.push_back({"var <= varentropy bound", report.var_h, v_bound,
                        3.0 * report.se_var,
                        report.var_h <= v_bound + 3.0 * report.se_var});
  if (equality_family) {
    table.rows.push_back({"var sharpness (equality)", report.var_h, v_bound,
                          3.0 * report.se_var,
                          std::abs(report.var_h - v_bound) <=
                              3.0 * report.se_var});
  }

  const DeviationProfile profile(params);
  for (const auto& pt : report.mgf_points) {
    const double bound = std::exp(profile.psi(pt.alpha));
    const double rel = pt.value > 0.0 ? pt.se / pt.value : 0.0;
    table.rows.push_back({"mgf <= exp(psi_c), alpha=" + fmt(pt.alpha),
                          pt.value, bound, 3.0 * pt.se,
                          pt.value <= bound * (1.0 + 3.0 * rel)});
    if (equality_family) {
      table.rows.push_back({"mgf equality, alpha=" + fmt(pt.alpha), pt.value,
                            bound, 3.0 * pt.se,
                            std::abs(pt.value - bound) <= 3.0 * pt.se});
    }
  }

  for (const auto& pt : report.tail_freqs) {
    const double bound = tail_bound(params, pt.t, pt.side);
    table.rows.push_back(
        {std::string("tail ") + tail_side_name(pt.side) + ", t=" + fmt(pt.t),
         pt.freq, bound, 3.0 * pt.se, pt.freq <= bound + 3.0 * pt.se});
  }

  const double gap = entropy_gap(params);
  const double observed = report.min_h - report.entropy_ref;
  table.rows.push_back({"min(h~ - h) >= -entropy gap", observed, -gap, 1e-9,
                        observed >= -gap - 1e-9});
  return table;
}

}  // namespace infoconc
