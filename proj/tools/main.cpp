// infoconc: concentration bounds for the information content of convex
// measures -- bound evaluation, tail exponents, moment log-concavity
// certification and seeded simulations.
//
// Subcommands: bounds | dual | verify-moments | simulate
// Arguments are key=value tokens plus an optional config=FILE; the file wins
// conflicts (with a warning).  Exit codes: 0 success / all checks passed,
// 1 verdict failure, 2 input error, 3 numerical or internal failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include <infoconc/bounds.hpp>
#include <infoconc/errors.hpp>
#include <infoconc/family_config.hpp>
#include <infoconc/legendre.hpp>
#include <infoconc/measures.hpp>
#include <infoconc/moments.hpp>
#include <infoconc/montecarlo.hpp>
#include <infoconc/report.hpp>
#include <infoconc/run_config.hpp>

namespace {

using namespace infoconc;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void usage() {
  std::cerr <<
      "usage: infoconc <subcommand> key=value ...\n"
      "\n"
      "subcommands:\n"
      "  bounds          closed-form bounds for ConvexParams (n=, beta=):\n"
      "                  psi_c over an alpha grid, varentropy bound, entropy\n"
      "                  bound (max_density=), small ball (c0=), dual\n"
      "                  exponents (t= or ts=)\n"
      "  dual            Fenchel-Legendre tail exponents (n=, beta=, t= or\n"
      "                  ts=, side=upper|lower|both)\n"
      "  verify-moments  moment log-concavity certificate for a family\n"
      "                  (family=..., or synthetic=convex|affine); CSV curve\n"
      "  simulate        seeded simulation of the information content\n"
      "                  (family=..., seed=, count=, workers=); JSON report\n"
      "                  plus verdict table\n"
      "\n"
      "common keys: config=FILE, out=PATH, format=text|json|csv,\n"
      "             alphas=, ts=, ps= (comma lists)\n"
      "environment: INFOCONC_OUTPUT_DIR prefixes relative out= paths\n";
}

// out= resolution: a relative path lands in $INFOCONC_OUTPUT_DIR when set.
std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("INFOCONC_OUTPUT_DIR")) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void write_or_print(const RunConfig& config, const std::string& payload) {
  const std::string out = config.get("out");
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  const auto path = resolve_out(out);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + path.string());
  f << payload;
}

ConvexParams params_from(const RunConfig& config) {
  return ConvexParams(config.get_int("n", 0), config.get_double("beta"));
}

std::vector<double> alpha_grid_from(const RunConfig& config,
                                    const ConvexParams& params) {
  auto grid = config.get_grid("alphas");
  if (grid.empty() && config.has("alpha")) {
    grid.push_back(config.get_double("alpha"));
  }
  if (grid.empty()) grid = default_alpha_grid(params);
  return grid;
}

std::vector<double> t_grid_from(const RunConfig& config) {
  auto grid = config.get_grid("ts");
  if (grid.empty() && config.has("t")) grid.push_back(config.get_double("t"));
  return grid;
}

ordered_json dual_json(const ConvexParams& params, double t, TailSide side) {
  const TailExponent e =
      side == TailSide::Upper ? dual_upper(params, t) : dual_lower(params, t);
  ordered_json j;
  j["t"] = t;
  j["side"] = tail_side_name(side);
  if (e.infinite) {
    j["exponent"] = "inf";
    j["tail_bound"] = 0.0;
  } else {
    j["exponent"] = e.value;
    j["alpha_star"] = *e.alpha_star;
    j["tail_bound"] = std::exp(-e.value);
  }
  return j;
}

void print_dual_text(const ordered_json& j, std::ostream& os) {
  os << "  t=" << fmt(j["t"].get<double>()) << "  side="
     << j["side"].get<std::string>();
  if (j["exponent"].is_string()) {
    os << "  exponent=inf  tail_bound=0\n";
  } else {
    os << "  exponent=" << fmt(j["exponent"].get<double>())
       << "  alpha_star=" << fmt(j["alpha_star"].get<double>())
       << "  tail_bound=" << fmt(j["tail_bound"].get<double>()) << "\n";
  }
}

int cmd_bounds(const RunConfig& config) {
  const ConvexParams params = params_from(config);
  const DeviationProfile profile(params);
  const auto alphas = alpha_grid_from(config, params);
  const auto ts = t_grid_from(config);

  ordered_json j;
  j["n"] = params.n();
  j["beta"] = params.beta();
  j["kappa"] = params.kappa();
  j["alpha_max"] = params.alpha_max();
  j["varentropy_bound"] = varentropy_bound(params);
  j["entropy_gap"] = entropy_gap(params);

  ordered_json psi_rows = ordered_json::array();
  for (double a : alphas) {
    psi_rows.push_back({{"alpha", a},
                        {"psi", profile.psi(a)},
                        {"psi_prime", profile.psi_prime(a)},
                        {"psi_second", profile.psi_second(a)}});
  }
  j["psi"] = psi_rows;

  if (config.has("max_density")) {
    j["entropy_upper_bound"] =
        entropy_upper_bound(params, config.get_double("max_density"));
  }
  if (config.has("c0")) {
    const SmallBallResult sb = small_ball(params, config.get_double("c0"));
    j["small_ball"] = {{"c0", sb.c0},
                       {"alpha_star", sb.alpha_star},
                       {"c1", sb.c1},
                       {"t", sb.t}};
  }
  if (config.has("fisher_info")) {
    j["fisher_varentropy_bound"] = fisher_varentropy_bound(
        params, config.get_double("trace_sigma", params.n()),
        config.get_double("fisher_info"));
  }
  if (!ts.empty()) {
    ordered_json duals = ordered_json::array();
    for (double t : ts) {
      duals.push_back(dual_json(params, t, TailSide::Upper));
      duals.push_back(dual_json(params, t, TailSide::Lower));
    }
    j["dual"] = duals;
  }

  const std::string format = config.get("format", "text");
  if (format == "json") {
    write_or_print(config, j.dump(2) + "\n");
  } else if (format == "csv") {
    std::string csv = "quantity,param,value\n";
    csv += "varentropy_bound,," + fmt(j["varentropy_bound"].get<double>()) + "\n";
    csv += "entropy_gap,," + fmt(j["entropy_gap"].get<double>()) + "\n";
    csv += "alpha_max,," + fmt(j["alpha_max"].get<double>()) + "\n";
    for (const auto& row : j["psi"]) {
      csv += "psi," + fmt(row["alpha"].get<double>()) + "," +
             fmt(row["psi"].get<double>()) + "\n";
    }
    if (j.contains("entropy_upper_bound")) {
      csv += "entropy_upper_bound,," +
             fmt(j["entropy_upper_bound"].get<double>()) + "\n";
    }
    if (j.contains("small_ball")) {
      csv += "small_ball_alpha_star,," +
             fmt(j["small_ball"]["alpha_star"].get<double>()) + "\n";
      csv += "small_ball_c1,," + fmt(j["small_ball"]["c1"].get<double>()) + "\n";
    }
    if (j.contains("dual")) {
      for (const auto& row : j["dual"]) {
        csv += std::string("dual_") + row["side"].get<std::string>() + "," +
               fmt(row["t"].get<double>()) + "," +
               (row["exponent"].is_string() ? std::string("inf")
                                            : fmt(row["exponent"].get<double>())) +
               "\n";
      }
    }
    write_or_print(config, csv);
  } else {
    std::string out;
    out += "n=" + std::to_string(params.n()) + "  beta=" + fmt(params.beta()) +
           "  kappa=" + fmt(params.kappa()) +
           "  alpha_max=" + fmt(params.alpha_max()) + "\n";
    out += "varentropy_bound=" + fmt(j["varentropy_bound"].get<double>()) + "\n";
    out += "entropy_gap=" + fmt(j["entropy_gap"].get<double>()) + "\n";
    if (j.contains("entropy_upper_bound")) {
      out += "entropy_upper_bound=" +
             fmt(j["entropy_upper_bound"].get<double>()) + "\n";
    }
    if (j.contains("fisher_varentropy_bound")) {
      out += "fisher_varentropy_bound=" +
             fmt(j["fisher_varentropy_bound"].get<double>()) + "\n";
    }
    if (j.contains("small_ball")) {
      out += "small_ball: alpha_star=" +
             fmt(j["small_ball"]["alpha_star"].get<double>()) +
             "  c1=" + fmt(j["small_ball"]["c1"].get<double>()) +
             "  t=" + fmt(j["small_ball"]["t"].get<double>()) + "\n";
    }
    out += "psi_c over alpha grid:\n";
    for (const auto& row : j["psi"]) {
      out += "  alpha=" + fmt(row["alpha"].get<double>()) +
             "  psi=" + fmt(row["psi"].get<double>()) +
             "  psi'=" + fmt(row["psi_prime"].get<double>()) +
             "  psi''=" + fmt(row["psi_second"].get<double>()) + "\n";
    }
    if (j.contains("dual")) {
      out += "dual exponents:\n";
      std::ostringstream os;
      for (const auto& row : j["dual"]) print_dual_text(row, os);
      out += os.str();
    }
    write_or_print(config, out);
  }
  return 0;
}

int cmd_dual(const RunConfig& config) {
  const ConvexParams params = params_from(config);
  const auto ts = t_grid_from(config);
  if (ts.empty()) throw DomainError("dual requires t= or ts=");
  const std::string side = config.get("side", "both");

  ordered_json rows = ordered_json::array();
  for (double t : ts) {
    if (side == "upper" || side == "both") {
      rows.push_back(dual_json(params, t, TailSide::Upper));
    }
    if (side == "lower" || side == "both") {
      rows.push_back(dual_json(params, t, TailSide::Lower));
    }
    if (side != "upper" && side != "lower" && side != "both") {
      throw DomainError("side must be upper, lower or both");
    }
  }

  if (config.get("format", "text") == "json") {
    ordered_json j;
    j["n"] = params.n();
    j["beta"] = params.beta();
    j["dual"] = rows;
    write_or_print(config, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& row : rows) print_dual_text(row, os);
    write_or_print(config, os.str());
  }
  return 0;
}

std::vector<double> p_grid_from(const RunConfig& config, double s, int n) {
  auto grid = config.get_grid("ps");
  if (!grid.empty()) return grid;
  const double step = config.get_double("p_step", 0.05);
  // 1% standoff from the domain endpoints (p > max(0, -n s), and p < -1/s
  // has no analogue for the n-dimensional curve).
  double lo = std::max(0.0, -n * s) * 1.01;
  lo = std::max(lo + step, step);
  const double hi = config.get_double("p_hi", lo + std::max(3.0, 40 * step));
  return uniform_grid(config.get_double("p_lo", lo), hi, step);
}

int cmd_verify_moments(const RunConfig& config) {
  MomentCurve curve;
  std::string label;

  const std::string synthetic = config.get("synthetic");
  if (!synthetic.empty()) {
    // Test hook: certify a hand-built curve instead of a family.
    const auto grid = uniform_grid(0.1, 3.0, 0.05);
    curve.grid = grid;
    curve.regime = MomentRegime::SZero;
    curve.normalizer = "synthetic " + synthetic;
    for (double p : grid) {
      curve.logm.push_back(synthetic == "convex" ? p * p : 1.0 + 2.0 * p);
    }
    label = "synthetic:" + synthetic;
  } else {
    const Family family = family_from_config(config.keys);
    const double s = config.get_double("s_declared", natural_concavity(family));
    curve = density_moment_curve(family, s,
                                 p_grid_from(config, s, dimension(family)));
    label = family_id(family);
  }

  const double tolerance = config.get_double("tolerance", 1e-7);
  const ConcavityCertificate cert = certify_log_concavity(curve, tolerance);

  if (config.has("out")) {
    write_or_print(config, moment_curve_csv(curve));
  } else {
    std::cout << moment_curve_csv(curve);
  }
  std::cerr << label << ": " << (cert.pass ? "pass" : "FAIL")
            << "  worst second difference " << fmt(cert.worst) << " at p="
            << fmt(cert.worst_p) << " (tolerance " << fmt(cert.tolerance)
            << ")\n";
  return cert.pass ? 0 : 1;
}

int cmd_simulate(const RunConfig& config) {
  const Family family = family_from_config(config.keys);

  McOptions options;
  options.seed = config.get_u64("seed", 0);
  options.count = config.get_u64("count", 100000);
  options.workers = config.get_int("workers", 1);
  options.alpha_grid = config.get_grid("alphas");
  options.t_grid = t_grid_from(config);

  const SampleReport report = information_stats(family, options);

  // The Gaussian family is checked against the log-concave limit profile,
  // realized as a very large beta.
  const ConvexParams params = std::visit(
      [&config](const auto& fam) -> ConvexParams {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily> ||
                      std::is_same_v<T, StudentFamily>) {
          return fam.params();
        } else {
          const int n = dimension(Family(fam));
          return ConvexParams(n, config.get_double("beta", 1e8));
        }
      },
      family);

  const VerdictTable verdicts = verify_bounds(report, params);

  if (config.get("format", "json") == "csv") {
    write_or_print(config, report_csv(report));
  } else {
    write_or_print(config, report_to_json(report));
  }
  std::cerr << verdicts_to_text(verdicts);
  return verdicts.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    usage();
    return 2;
  }
  if (args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    usage();
    return 0;
  }
  try {
    const RunConfig config = parse_run_config(args, &std::cerr);
    if (config.command == "bounds") return cmd_bounds(config);
    if (config.command == "dual") return cmd_dual(config);
    if (config.command == "verify-moments") return cmd_verify_moments(config);
    if (config.command == "simulate") return cmd_simulate(config);
    std::cerr << "unknown subcommand: " << config.command << "\n";
    usage();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
