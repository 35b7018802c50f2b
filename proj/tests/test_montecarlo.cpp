#include <doctest.h>

#include <cmath>
#include <infoconc/bounds.hpp>
#include <infoconc/measures.hpp>
#include <infoconc/montecarlo.hpp>
#include <infoconc/report.hpp>
#include <vector>

#include "oracles.hpp"

using namespace infoconc;

namespace {
const Family kPareto12(ParetoFamily(ConvexParams(1, 2.0), 1.0));
const Family kPareto26(ParetoFamily(ConvexParams(2, 6.0), 1.0));
const Family kStudent15(StudentFamily(ConvexParams(1, 5.0)));
}  // namespace

TEST_CASE("sampler determinism") {
  const auto a = sample_points(kPareto26, 99, 10);
  const auto b = sample_points(kPareto26, 99, 10);
  REQUIRE(a.size() == 20);
  CHECK(a == b);
  const auto c = sample_points(kPareto26, 100, 10);
  CHECK(a != c);
}

TEST_CASE("worker count does not change results") {
  McOptions opt;
  opt.seed = 31337;
  opt.count = 200000;
  opt.workers = 1;
  const SampleReport r1 = information_stats(kPareto26, opt);
  opt.workers = 3;
  const SampleReport r3 = information_stats(kPareto26, opt);
  CHECK(report_to_json(r1) == report_to_json(r3));
}

TEST_CASE("chunk streams give prefix stability across counts") {
  const auto small = sample_information_contents(kPareto12, 5, kChunkSize);
  const auto big = sample_information_contents(kPareto12, 5, kChunkSize + 10);
  for (std::uint64_t i = 0; i < kChunkSize; ++i) {
    REQUIRE(small[i] == big[i]);
  }
}

TEST_CASE("pareto sampler: log(1+X) is standard exponential (KS)") {
  const auto pts = sample_points(kPareto12, 271828, 100000);
  std::vector<double> y(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) y[i] = std::log1p(pts[i]);
  const double d = oracle::ks_distance(
      y, [](double t) { return t <= 0.0 ? 0.0 : 1.0 - std::exp(-t); });
  CHECK(d < 1.36 / std::sqrt(100000.0));
}

TEST_CASE("pareto radial sum matches its quadrature mean") {
  // S = sum x_i has density proportional to s^{n-1}(a+s)^{-beta}.
  const int n = 2;
  const double beta = 6.0, a = 1.0;
  const auto pts = sample_points(kPareto26, 1234, 200000);
  std::vector<double> s(200000);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = pts[2 * i] + pts[2 * i + 1];
  }
  auto weight = [=](double t) {
    return std::pow(t, n - 1) * std::pow(a + t, -beta);
  };
  const double z = oracle::simpson_semi_inf(weight, 0.0, 1e-11);
  const double mean_oracle = oracle::simpson_semi_inf(
      [&weight](double t) { return t * weight(t); }, 0.0, 1e-11) / z;
  const double se = std::sqrt(oracle::variance(s) / s.size());
  CHECK(std::abs(oracle::mean(s) - mean_oracle) < 3.0 * se);
}

TEST_CASE("student sampler distribution (KS against quadrature CDF)") {
  const auto pts = sample_points(kStudent15, 321, 100000);
  // Independent CDF: cumulative trapezoid of the density on a fine grid.
  const double z = oracle::simpson_real_line(
      [](double x) { return std::pow(1.0 + x * x, -5.0); }, 1e-12);
  const int knots = 40001;
  const double hi = 15.0;
  std::vector<double> xs(knots), cdf(knots);
  double acc = 0.0;
  double prev = 0.0;
  for (int i = 0; i < knots; ++i) {
    xs[i] = -hi + 2.0 * hi * i / (knots - 1);
    const double d = std::pow(1.0 + xs[i] * xs[i], -5.0) / z;
    if (i > 0) acc += 0.5 * (d + prev) * (xs[i] - xs[i - 1]);
    prev = d;
    cdf[i] = acc;
  }
  auto cdf_fn = [&xs, &cdf](double x) {
    if (x <= xs.front()) return 0.0;
    if (x >= xs.back()) return 1.0;
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t k = it - xs.begin();
    const double f = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return cdf[k - 1] + f * (cdf[k] - cdf[k - 1]);
  };
  const double d = oracle::ks_distance(pts, cdf_fn);
  CHECK(d < 1.36 / std::sqrt(100000.0));
}

TEST_CASE("information stats against the exponential representation") {
  McOptions opt;
  opt.seed = 8;
  opt.count = 1000000;
  opt.workers = 2;
  const SampleReport rep = information_stats(kPareto12, opt);
  // h~ = 2 Exp(1): mean 2, variance 4.
  CHECK(std::abs(rep.mean_h - 2.0) <= 3.0 * rep.se_mean);
  CHECK(std::abs(rep.var_h - 4.0) <= 3.0 * rep.se_var);
  CHECK(rep.entropy_ref == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.min_h >= 0.0);
}

TEST_CASE("centered mgf at alpha zero is exactly one") {
  McOptions opt;
  opt.seed = 77;
  opt.count = 50000;
  opt.alpha_grid = {0.0};
  const SampleReport rep = information_stats(kPareto12, opt);
  CHECK(rep.mgf_points.size() == 1);
  CHECK(rep.mgf_points[0].value == 1.0);
}

TEST_CASE("variance sharpness and validity") {
  McOptions opt;
  opt.seed = 4242;
  opt.count = 400000;
  opt.workers = 2;

  for (const Family* fam : {&kPareto12, &kPareto26}) {
    const SampleReport rep = information_stats(*fam, opt);
    const ConvexParams params =
        std::get<ParetoFamily>(*fam).params();
    CHECK(std::abs(rep.var_h - varentropy_bound(params)) <= 3.0 * rep.se_var);
  }

  const SampleReport rep = information_stats(kStudent15, opt);
  const ConvexParams params(1, 5.0);
  // Validity with strict slack: the Student family is not extremal.
  CHECK(rep.var_h + 3.0 * rep.se_var < varentropy_bound(params));
}

TEST_CASE("verify_bounds verdicts") {
  McOptions opt;
  opt.seed = 99;
  opt.count = 400000;
  opt.workers = 2;

  SUBCASE("pareto equality family passes everything") {
    const SampleReport rep = information_stats(kPareto12, opt);
    const VerdictTable table = verify_bounds(rep, ConvexParams(1, 2.0));
    CHECK(table.all_pass());
    bool saw_equality = false;
    for (const auto& row : table.rows) {
      if (row.check.find("equality") != std::string::npos) saw_equality = true;
    }
    CHECK(saw_equality);
  }

  SUBCASE("student passes the one-sided checks") {
    const SampleReport rep = information_stats(kStudent15, opt);
    const VerdictTable table = verify_bounds(rep, ConvexParams(1, 5.0));
    CHECK(table.all_pass());
    for (const auto& row : table.rows) {
      CHECK(row.check.find("equality") == std::string::npos);
    }
  }

  SUBCASE("corrupted report fails") {
    SampleReport rep = information_stats(kPareto12, opt);
    rep.var_h = varentropy_bound(ConvexParams(1, 2.0)) + 1.0;
    const VerdictTable table = verify_bounds(rep, ConvexParams(1, 2.0));
    CHECK_FALSE(table.all_pass());
  }
}

TEST_CASE("gaussian limit simulation") {
  McOptions opt;
  opt.seed = 1618;
  opt.count = 400000;
  opt.workers = 2;
  const Family gauss(GaussianFamily(1));
  const SampleReport rep = information_stats(gauss, opt);

  // Chi-square MGF oracle: E e^{alpha(h~-h)} = (1-alpha)^{-1/2} e^{-alpha/2}.
  for (const auto& pt : rep.mgf_points) {
    const double exact =
        std::exp(-0.5 * pt.alpha) / std::sqrt(1.0 - pt.alpha);
    CHECK(std::abs(pt.value - exact) <= 3.0 * pt.se);
  }

  // All bounds hold against the beta -> infinity profile.
  const VerdictTable table = verify_bounds(rep, ConvexParams(1, 1e8));
  CHECK(table.all_pass());
}

TEST_CASE("support bound with empirical centering") {
  McOptions opt;
  opt.seed = 5;
  opt.count = 500000;
  opt.workers = 2;
  for (const Family* fam : {&kPareto12, &kPareto26}) {
    const SampleReport rep = information_stats(*fam, opt);
    const ConvexParams params = std::get<ParetoFamily>(*fam).params();
    CHECK(rep.min_h - rep.mean_h >=
          -entropy_gap(params) - 5.0 * rep.se_mean);
  }
}

TEST_CASE("input validation") {
  const Family hom(HomogeneousFamily(1, 0.5, NormKind::L2));
  CHECK_FALSE(has_sampler(hom));
  CHECK(has_sampler(kPareto12));
  CHECK_FALSE(has_sampler(Family(StudentFamily(ConvexParams(2, 7.0)))));

  McOptions opt;
  opt.count = 1000;
  CHECK_THROWS_AS(information_stats(hom, opt), DomainError);

  McOptions bad_alpha;
  bad_alpha.count = 1000;
  bad_alpha.alpha_grid = {0.49};  // alpha_max = 0.5, standoff violated
  CHECK_THROWS_AS(information_stats(kPareto12, bad_alpha), DomainError);

  McOptions bad_t;
  bad_t.count = 1000;
  bad_t.t_grid = {0.0};
  CHECK_THROWS_AS(information_stats(kPareto12, bad_t), DomainError);
}

TEST_CASE("report serialization round trip") {
  McOptions opt;
  opt.seed = 2718;
  opt.count = 30000;
  const SampleReport rep = information_stats(kStudent15, opt);
  const std::string json = report_to_json(rep);
  const SampleReport back = report_from_json(json);
  CHECK(report_to_json(back) == json);
  CHECK(back.family == rep.family);
  CHECK(back.count == rep.count);
  CHECK(back.family_config.at("family") == "student");

  // The params block is itself a loadable family config.
  CHECK(family_id(family_from_config(back.family_config)) == rep.family);

  const std::string csv = report_csv(rep);
  CHECK(csv.rfind("kind,param,side,value,se\n", 0) == 0);

  const VerdictTable table = verify_bounds(rep, ConvexParams(1, 5.0));
  const std::string text = verdicts_to_text(table);
  CHECK(text.find("[pass]") != std::string::npos);
  CHECK(verdicts_to_json(table).find("\"all_pass\": true") != std::string::npos);
}
