#pragma once

// INI-style configuration files: [section] headers over key = value lines.
// Unknown sections or keys are configuration errors so typos fail loudly.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "aoweno/common.hpp"

namespace aoweno {

class Config {
 public:
  Config() = default;

  static Config parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse(ss.str(), path);
  }

  static Config parse(const std::string& text, const std::string& origin = "<config>") {
    Config cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const std::string s = trim(strip_comment(line));
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']')
          throw ConfigError(origin + ":" + std::to_string(lineno) +
                            ": malformed section header '" + s + "'");
        section = trim(s.substr(1, s.size() - 2));
        if (section.empty())
          throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
        cfg.values_[section];  // section may legitimately stay empty
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": expected 'key = value', got '" + s + "'");
      const std::string key = trim(s.substr(0, eq));
      const std::string val = trim(s.substr(eq + 1));
      if (key.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                          ": key '" + key + "' outside any [section]");
      cfg.values_[section][key] = val;
    }
    return cfg;
  }

  bool has(const std::string& section, const std::string& key) const {
    const auto s = values_.find(section);
    return s != values_.end() && s->second.count(key) > 0;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    const auto s = values_.find(section);
    if (s == values_.end()) return fallback;
    const auto k = s->second.find(key);
    return k == s->second.end() ? fallback : k->second;
  }

  double get_double(const std::string& section, const std::string& key,
                    double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key, "");
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw ConfigError("config [" + section + "] " + key + ": '" + v +
                        "' is not a number");
    }
  }

  int get_int(const std::string& section, const std::string& key, int fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key, "");
    try {
      std::size_t pos = 0;
      const int i = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return i;
    } catch (const std::exception&) {
      throw ConfigError("config [" + section + "] " + key + ": '" + v +
                        "' is not an integer");
    }
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get_string(section, key, "");
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config [" + section + "] " + key + ": '" + v +
                      "' is not a boolean");
  }

  /// Rejects any section/key pair not present in the allowed map.
  void validate(const std::map<std::string, std::set<std::string>>& allowed) const {
    for (const auto& [section, kv] : values_) {
      const auto it = allowed.find(section);
      if (it == allowed.end())
        throw ConfigError("config: unknown section [" + section + "]");
      for (const auto& [key, _] : kv)
        if (!it->second.count(key))
          throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
    }
  }

 private:
  static std::string strip_comment(const std::string& s) {
    const auto pos = s.find_first_of("#;");
    return pos == std::string::npos ? s : s.substr(0, pos);
  }
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  std::map<std::string, std::map<std::string, std::string>> values_;
};

/// The sections and keys the CLI understands.
inline const std::map<std::string, std::set<std::string>>& config_schema() {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"problem", {"name", "n", "ny", "t_end", "jump_policy", "kh_as_printed"}},
      {"scheme",
       {"name", "gamma_hi", "gamma_lo", "gamma_avg", "epsilon", "beta5",
        "characteristic"}},
      {"run",
       {"cfl", "dt_mode", "dt_coeff", "dt_exponent", "resolutions", "schemes",
        "repeats"}},
      {"output", {"dir", "cache_dir"}},
  };
  return schema;
}

}  // namespace aoweno
