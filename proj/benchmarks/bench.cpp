#include <benchmark/benchmark.h>

#include <cmath>
#include <infoconc/bounds.hpp>
#include <infoconc/legendre.hpp>
#include <infoconc/measures.hpp>
#include <infoconc/moments.hpp>
#include <infoconc/montecarlo.hpp>
#include <infoconc/rng.hpp>

using namespace infoconc;

static void PsiProfile(benchmark::State& state) {
  const DeviationProfile profile(ConvexParams(static_cast<int>(state.range(0)),
                                              state.range(0) + 4.0));
  const double hi = 0.5 * profile.alpha_max();
  double alpha = -2.0;
  for (auto _ : state) {
    alpha = alpha < hi ? alpha + 1e-3 : -2.0;
    benchmark::DoNotOptimize(profile.psi(alpha));
  }
}
BENCHMARK(PsiProfile)->Arg(1)->Arg(5)->Arg(20);

static void DualUpperSolve(benchmark::State& state) {
  const ConvexParams params(static_cast<int>(state.range(0)),
                            state.range(0) + 4.0);
  const double scale = std::sqrt(varentropy_bound(params));
  double t = 0.1;
  for (auto _ : state) {
    t = t < 4.0 * scale ? t + 0.01 : 0.1;
    benchmark::DoNotOptimize(dual_upper(params, t).value);
  }
}
BENCHMARK(DualUpperSolve)->Arg(1)->Arg(5);

static void SmallBallSolve(benchmark::State& state) {
  const ConvexParams params(3, 7.0);
  const double gap = entropy_gap(params);
  double extra = 0.5;
  for (auto _ : state) {
    extra = extra < 6.0 ? extra + 0.01 : 0.5;
    benchmark::DoNotOptimize(
        small_ball(params, std::exp(-(gap + extra) / 3.0)).c1);
  }
}
BENCHMARK(SmallBallSolve);

static void ParetoSampling(benchmark::State& state) {
  const Family fam(
      ParetoFamily(ConvexParams(static_cast<int>(state.range(0)),
                                state.range(0) + 4.0),
                   1.0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_information_contents(fam, ++seed, 10000, 1));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(ParetoSampling)->Arg(1)->Arg(2)->Arg(8);

static void MomentCurvePoint(benchmark::State& state) {
  const Family st(StudentFamily(ConvexParams(1, 5.0)));
  double p = 0.25;
  for (auto _ : state) {
    p = p < 3.0 ? p + 0.01 : 0.25;
    benchmark::DoNotOptimize(log_pow_integral(st, p));
  }
}
BENCHMARK(MomentCurvePoint);

BENCHMARK_MAIN();
