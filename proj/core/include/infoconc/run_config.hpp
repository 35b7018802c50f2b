#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <infoconc/family_config.hpp>

namespace infoconc {

// A fully resolved CLI invocation: the subcommand plus the merged key=value
// map (command-line tokens, overridden by an optional config file named by
// the `config` key - the file wins conflicts, with a warning).
//
// The canonical text form is the command line followed by the sorted
// key=value lines; parsing that text reproduces an identical config.
struct RunConfig {
  std::string command;
  KeyValues keys;

  bool has(const std::string& key) const { return keys.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  int get_int(const std::string& key, int fallback) const;

  // Comma-separated list of reals under `key`; empty when absent.
  std::vector<double> get_grid(const std::string& key) const;
};

// args are everything after the program name: args[0] is the subcommand,
// the rest key=value tokens.  Warnings (config-file overrides) go to *warn
// when non-null.
RunConfig parse_run_config(const std::vector<std::string>& args,
                           std::ostream* warn = nullptr);

std::string canonical_text(const RunConfig& config);

}  // namespace infoconc
