#include <infoconc/family_config.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace infoconc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const KeyValues& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw DomainError("missing config key: " + key);
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0') {
    throw DomainError("config key " + key + " is not a number: " + it->second);
  }
  return v;
}

double parse_double_or(const KeyValues& kv, const std::string& key,
                       double fallback) {
  return kv.count(key) ? parse_double(kv, key) : fallback;
}

int parse_int(const KeyValues& kv, const std::string& key) {
  const double v = parse_double(kv, key);
  const int i = static_cast<int>(v);
  if (i != v) throw DomainError("config key " + key + " must be an integer");
  return i;
}

std::string round_trip(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

KeyValues parse_key_values_text(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line is not key=value: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw DomainError("config line has an empty key");
    kv[key] = value;
  }
  return kv;
}

std::string canonical_text(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) {  // std::map iterates in sorted key order
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

Family family_from_config(const KeyValues& kv) {
  const auto it = kv.find("family");
  if (it == kv.end()) throw DomainError("missing config key: family");
  const std::string& kind = it->second;
  const int n = parse_int(kv, "n");

  if (kind == "pareto") {
    return ParetoFamily(ConvexParams(n, parse_double(kv, "beta")),
                        parse_double_or(kv, "a", 1.0));
  }
  if (kind == "student") {
    return StudentFamily(ConvexParams(n, parse_double(kv, "beta")));
  }
  if (kind == "gaussian") {
    return GaussianFamily(n);
  }
  if (kind == "homogeneous") {
    NormKind q = NormKind::L2;
    if (const auto qi = kv.find("norm_q"); qi != kv.end()) {
      if (qi->second == "1") {
        q = NormKind::L1;
      } else if (qi->second == "2") {
        q = NormKind::L2;
      } else if (qi->second == "inf") {
        q = NormKind::LInf;
      } else {
        throw DomainError("norm_q must be 1, 2 or inf");
      }
    }
    return HomogeneousFamily(n, parse_double(kv, "s"), q,
                             parse_double_or(kv, "norm_scale", 1.0));
  }
  throw DomainError("unknown family kind: " + kind);
}

KeyValues family_to_config(const Family& f) {
  KeyValues kv;
  std::visit(
      [&kv](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, ParetoFamily>) {
          kv["family"] = "pareto";
          kv["n"] = std::to_string(fam.params().n());
          kv["beta"] = round_trip(fam.params().beta());
          kv["a"] = round_trip(fam.scale());
        } else if constexpr (std::is_same_v<T, HomogeneousFamily>) {
          kv["family"] = "homogeneous";
          kv["n"] = std::to_string(fam.dimension());
          kv["s"] = round_trip(fam.s());
          kv["norm_q"] = norm_kind_name(fam.norm_kind());
          kv["norm_scale"] = round_trip(fam.norm_scale());
        } else if constexpr (std::is_same_v<T, StudentFamily>) {
          kv["family"] = "student";
          kv["n"] = std::to_string(fam.params().n());
          kv["beta"] = round_trip(fam.params().beta());
        } else {
          kv["family"] = "gaussian";
          kv["n"] = std::to_string(fam.dimension());
        }
      },
      f);
  return kv;
}

}  // namespace infoconc
