#include <infoconc/run_config.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace infoconc {

namespace {

double to_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw DomainError("key " + key + " is not a number: " + value);
  }
  return v;
}

}  // namespace

std::string RunConfig::get(const std::string& key,
                           const std::string& fallback) const {
  const auto it = keys.find(key);
  return it == keys.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key) const {
  const auto it = keys.find(key);
  if (it == keys.end()) throw DomainError("missing required key: " + key);
  return to_double(key, it->second);
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto it = keys.find(key);
  return it == keys.end() ? fallback : to_double(key, it->second);
}

std::uint64_t RunConfig::get_u64(const std::string& key,
                                 std::uint64_t fallback) const {
  const auto it = keys.find(key);
  if (it == keys.end()) return fallback;
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0') {
    throw DomainError("key " + key + " is not an unsigned integer: " +
                      it->second);
  }
  return v;
}

int RunConfig::get_int(const std::string& key, int fallback) const {
  const double v = get_double(key, static_cast<double>(fallback));
  const int i = static_cast<int>(v);
  if (i != v) throw DomainError("key " + key + " must be an integer");
  return i;
}

std::vector<double> RunConfig::get_grid(const std::string& key) const {
  const auto it = keys.find(key);
  std::vector<double> grid;
  if (it == keys.end()) return grid;
  std::istringstream in(it->second);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    grid.push_back(to_double(key, item));
  }
  return grid;
}

RunConfig parse_run_config(const std::vector<std::string>& args,
                           std::ostream* warn) {
  if (args.empty()) throw DomainError("missing subcommand");
  RunConfig config;
  config.command = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    const auto eq = args[i].find('=');
    if (eq == std::string::npos) {
      throw DomainError("argument is not key=value: " + args[i]);
    }
    config.keys[args[i].substr(0, eq)] = args[i].substr(eq + 1);
  }

  const auto cfg = config.keys.find("config");
  if (cfg != config.keys.end()) {
    std::ifstream in(cfg->second);
    if (!in) throw DomainError("cannot open config file: " + cfg->second);
    std::stringstream buf;
    buf << in.rdbuf();
    const KeyValues file_keys = parse_key_values_text(buf.str());
    for (const auto& [k, v] : file_keys) {
      const auto it = config.keys.find(k);
      if (it != config.keys.end() && it->second != v && warn != nullptr) {
        *warn << "warning: config file overrides " << k << "=" << it->second
              << " with " << k << "=" << v << "\n";
      }
      config.keys[k] = v;
    }
  }
  return config;
}

std::string canonical_text(const RunConfig& config) {
  return "command=" + config.command + "\n" + canonical_text(config.keys);
}

}  // namespace infoconc
