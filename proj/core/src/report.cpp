#include <infoconc/report.hpp>

#include <cstdio>
#include <json.hpp>

namespace infoconc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string report_to_json(const SampleReport& report) {
  ordered_json j;
  j["version"] = 1;
  j["family"] = report.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.family_config) params[k] = v;
  j["params"] = params;
  j["seed"] = report.seed;
  j["count"] = report.count;
  j["statistics"] = {
      {"mean_h", report.mean_h},   {"var_h", report.var_h},
      {"se_mean", report.se_mean}, {"se_var", report.se_var},
      {"min_h", report.min_h},     {"entropy_ref", report.entropy_ref},
  };
  j["grids"] = {{"alpha", report.alpha_grid}, {"t", report.t_grid}};
  ordered_json mgf = ordered_json::array();
  for (const auto& pt : report.mgf_points) {
    mgf.push_back({{"alpha", pt.alpha}, {"value", pt.value}, {"se", pt.se}});
  }
  j["mgf"] = mgf;
  ordered_json tails = ordered_json::array();
  for (const auto& pt : report.tail_freqs) {
    tails.push_back({{"t", pt.t},
                     {"side", tail_side_name(pt.side)},
                     {"freq", pt.freq},
                     {"se", pt.se}});
  }
  j["tails"] = tails;
  j["rng"] = {{"scheme", "xoshiro256++ / splitmix64 chunk streams"},
              {"chunk_size", kChunkSize}};
  return j.dump(2) + "\n";
}

SampleReport report_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  if (!j.contains("version") || j["version"].get<int>() != 1) {
    throw DomainError("unsupported report schema version");
  }
  SampleReport rep;
  rep.family = j["family"].get<std::string>();
  for (const auto& [k, v] : j["params"].items()) {
    rep.family_config[k] = v.get<std::string>();
  }
  rep.seed = j["seed"].get<std::uint64_t>();
  rep.count = j["count"].get<std::uint64_t>();
  const auto& st = j["statistics"];
  rep.mean_h = st["mean_h"].get<double>();
  rep.var_h = st["var_h"].get<double>();
  rep.se_mean = st["se_mean"].get<double>();
  rep.se_var = st["se_var"].get<double>();
  rep.min_h = st["min_h"].get<double>();
  rep.entropy_ref = st["entropy_ref"].get<double>();
  rep.alpha_grid = j["grids"]["alpha"].get<std::vector<double>>();
  rep.t_grid = j["grids"]["t"].get<std::vector<double>>();
  for (const auto& pt : j["mgf"]) {
    rep.mgf_points.push_back({pt["alpha"].get<double>(),
                              pt["value"].get<double>(),
                              pt["se"].get<double>()});
  }
  for (const auto& pt : j["tails"]) {
    rep.tail_freqs.push_back(
        {pt["t"].get<double>(),
         pt["side"].get<std::string>() == "upper" ? TailSide::Upper
                                                  : TailSide::Lower,
         pt["freq"].get<double>(), pt["se"].get<double>()});
  }
  return rep;
}

std::string report_csv(const SampleReport& report) {
  std::string out = "kind,param,side,value,se\n";
  for (const auto& pt : report.mgf_points) {
    out += "mgf," + fmt12(pt.alpha) + ",," + fmt12(pt.value) + "," +
           fmt12(pt.se) + "\n";
  }
  for (const auto& pt : report.tail_freqs) {
    out += std::string("tail,") + fmt12(pt.t) + "," +
           tail_side_name(pt.side) + "," + fmt12(pt.freq) + "," +
           fmt12(pt.se) + "\n";
  }
  return out;
}

std::string verdicts_to_text(const VerdictTable& table) {
  std::string out;
  std::size_t width = 0;
  for (const auto& row : table.rows) width = std::max(width, row.check.size());
  for (const auto& row : table.rows) {
    out += row.pass ? "[pass] " : "[FAIL] ";
    out += row.check;
    out.append(width - row.check.size() + 2, ' ');
    out += "observed=" + fmt12(row.observed) + "  bound=" + fmt12(row.bound) +
           "  slack=" + fmt12(row.slack) + "\n";
  }
  out += table.all_pass() ? "all checks passed\n" : "SOME CHECKS FAILED\n";
  return out;
}

std::string verdicts_to_json(const VerdictTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"check", row.check},
                    {"observed", row.observed},
                    {"bound", row.bound},
                    {"slack", row.slack},
                    {"pass", row.pass}});
  }
  ordered_json j;
  j["verdicts"] = rows;
  j["all_pass"] = table.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace infoconc
