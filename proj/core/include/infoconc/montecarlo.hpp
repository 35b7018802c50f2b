#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <infoconc/convex_params.hpp>
#include <infoconc/family_config.hpp>
#include <infoconc/legendre.hpp>
#include <infoconc/measures.hpp>

namespace infoconc {

// Sampling is split into fixed-size chunks; chunk c covers sample indices
// [c * kChunkSize, (c+1) * kChunkSize) and draws from its own RNG stream
// (Rng::for_chunk).  The partition depends only on the sample count and the
// per-chunk results are folded in chunk order, so any worker count produces
// bit-identical output.  Partition and stream rule are frozen as part of the
// report schema (version 1).
inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 16;

// {-2, -1, -0.5, 0.25 a_max, 0.5 a_max}.  The MGF estimator's variance blows
// up as alpha approaches a_max; 0.5 a_max is the largest default point.
std::vector<double> default_alpha_grid(double alpha_sup);
std::vector<double> default_alpha_grid(const ConvexParams& params);

// {0.5, 1, 2, 4, 8} * sqrt(varentropy bound).
std::vector<double> default_t_grid(double varentropy);
std::vector<double> default_t_grid(const ConvexParams& params);

struct MgfPoint {
  double alpha = 0.0;
  double value = 0.0;
  double se = 0.0;
};

struct TailPoint {
  double t = 0.0;
  TailSide side = TailSide::Upper;
  double freq = 0.0;
  double se = 0.0;
};

// Empirical statistics of the information content of one seeded run.  The
// report is a pure function of (family, seed, count, grids): rerunning
// reproduces it bit-exactly.
//
// Tail events are centered at the exact entropy (entropy_ref) so that the
// almost-sure lower support is respected exactly; the MGF points are centered
// at the empirical mean, with the centering uncertainty folded into their
// standard errors.
struct SampleReport {
  std::string family;
  KeyValues family_config;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  double entropy_ref = 0.0;
  double mean_h = 0.0;
  double var_h = 0.0;
  double se_mean = 0.0;
  double se_var = 0.0;  // fourth-central-moment formula
  double min_h = 0.0;
  std::vector<double> alpha_grid;
  std::vector<double> t_grid;
  std::vector<MgfPoint> mgf_points;
  std::vector<TailPoint> tail_freqs;
};

// Pareto (any n), Student (n = 1) and Gaussian families have samplers.
bool has_sampler(const Family& f);

// count i.i.d. draws, row-major count x n, in canonical chunk order.
// Pareto scheme: T ~ Beta(n, beta-n), S = a T/(1-T), W uniform on the
// standard simplex, X = S W.
std::vector<double> sample_points(const Family& f, std::uint64_t seed,
                                  std::uint64_t count, int workers = 1);

// Information contents -log f(X_i) of count draws (same stream as
// sample_points).
std::vector<double> sample_information_contents(const Family& f,
                                                std::uint64_t seed,
                                                std::uint64_t count,
                                                int workers = 1);

struct McOptions {
  std::uint64_t seed = 0;
  std::uint64_t count = 100000;
  std::vector<double> alpha_grid;  // empty -> family default
  std::vector<double> t_grid;      // empty -> family default
  int workers = 1;
};

// Requires every alpha <= 0.95 * alpha_sup (5% standoff from the MGF domain
// endpoint) and a samplable family.
SampleReport information_stats(const Family& f, const McOptions& options);

struct VerdictRow {
  std::string check;
  double observed = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
};

struct VerdictTable {
  std::vector<VerdictRow> rows;
  bool all_pass() const;
};

// Holds the report against the closed-form results for `params`:
//   - each MGF point <= e^{psi_c(alpha)} within 3 standard errors,
//   - each tail frequency <= e^{-psi*(t)} within 3 binomial standard errors,
//   - empirical variance <= varentropy bound within 3 standard errors,
//   - min(h~ - entropy_ref) >= -(beta sum (beta-i)^{-1}).
// Reports from a Pareto family are additionally held to the equality cases
// (MGF and variance within 3 standard errors two-sidedly).
VerdictTable verify_bounds(const SampleReport& report,
                           const ConvexParams& params);

}  // namespace infoconc
