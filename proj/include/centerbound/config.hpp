#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>

#include "centerbound/error.hpp"

namespace centerbound {

enum class OutputFormat { json, csv, table };

inline OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw Error(ErrorCode::BadConfig, "unknown output format '" + text + "'");
}

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::table: return "table";
  }
  return "json";
}

/// Limits and knobs shared by every exhaustive routine.
///
/// All caps are loud: a routine that would need more than its cap throws
/// CapExceeded (or reports an Unknown rank) instead of subsampling.
struct Config {
  std::uint64_t enumeration_cap = 200000;  // elements listed by elements()
  std::uint64_t subgroup_cap = 512;        // group order for subgroup lattices
  std::uint64_t coset_cap = 100000;        // cosets in a quotient action
  std::uint64_t sample_pairs = 1000;       // pairs for sampled homomorphism checks
  std::uint64_t tuple_cap = 20000;         // generation tests in tuple searches
  bool rank_bounds = false;                // settle inequalities from rank intervals
  OutputFormat output_format = OutputFormat::json;
  std::uint64_t seed = 20240607;
  unsigned threads = 1;

  void validate() const {
    if (enumeration_cap == 0 || subgroup_cap == 0 || coset_cap == 0 || sample_pairs == 0 ||
        tuple_cap == 0)
      throw Error(ErrorCode::BadConfig, "all caps must be positive");
    if (threads == 0) throw Error(ErrorCode::BadConfig, "threads must be positive");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::BadConfig, key + " expects a non-negative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadConfig, key + " is out of range: '" + value + "'");
  }
}

inline bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::BadConfig, key + " expects a boolean, got '" + value + "'");
}

}  // namespace detail

/// Applies one `key=value` setting. Keys are case-insensitive and accept
/// both `enumeration_cap` and `enumeration-cap` spellings.
inline void apply_setting(Config& cfg, std::string key, const std::string& raw_value) {
  for (auto& c : key) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c == '-') c = '_';
  }
  const std::string value = detail::trim(raw_value);
  if (key == "enumeration_cap") cfg.enumeration_cap = detail::parse_u64(key, value);
  else if (key == "subgroup_cap") cfg.subgroup_cap = detail::parse_u64(key, value);
  else if (key == "coset_cap") cfg.coset_cap = detail::parse_u64(key, value);
  else if (key == "sample_pairs") cfg.sample_pairs = detail::parse_u64(key, value);
  else if (key == "tuple_cap") cfg.tuple_cap = detail::parse_u64(key, value);
  else if (key == "rank_bounds") cfg.rank_bounds = detail::parse_bool(key, value);
  else if (key == "output_format" || key == "format") cfg.output_format = parse_output_format(value);
  else if (key == "seed") cfg.seed = detail::parse_u64(key, value);
  else if (key == "threads") cfg.threads = static_cast<unsigned>(detail::parse_u64(key, value));
  else throw Error(ErrorCode::BadConfig, "unknown config key '" + key + "'");
}

/// Reads a key=value file; blank lines and lines starting with '#' are ignored.
inline void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::BadConfig,
                  path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, detail::trim(t.substr(0, eq)), t.substr(eq + 1));
  }
}

/// Applies CENTERBOUND_<KEY> environment overrides for every known key.
inline void apply_environment(Config& cfg, const char* prefix = "CENTERBOUND_") {
  static const char* const keys[] = {"ENUMERATION_CAP", "SUBGROUP_CAP", "COSET_CAP",
                                     "SAMPLE_PAIRS",    "TUPLE_CAP",    "RANK_BOUNDS",
                                     "OUTPUT_FORMAT",   "SEED",         "THREADS"};
  for (const char* key : keys) {
    const std::string name = std::string(prefix) + key;
    if (const char* v = std::getenv(name.c_str())) apply_setting(cfg, key, v);
  }
}

}  // namespace centerbound
