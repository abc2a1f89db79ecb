#include "nlsb/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nlsb/errors.hpp"

namespace nlsb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": empty section name");
      map[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    map[section][key] = value;
  }
  return map;
}

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ConfigError("config key '" + key + "': '" + value +
                      "' is not a number");
  return v;
}

long parse_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ConfigError("config key '" + key + "': '" + value +
                      "' is not an integer");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes")
    return true;
  if (value == "false" || value == "0" || value == "off" || value == "no")
    return false;
  throw ConfigError("config key '" + key + "': '" + value +
                    "' is not a boolean");
}

RunConfig config_from_map(const ConfigMap& map) {
  RunConfig cfg;
  cfg.profile.kind = ProfileKind::single_gauss;
  cfg.profile.amplitude = 1.75;
  cfg.profile.phase = default_phase(ProfileKind::single_gauss);
  cfg.model.n = 1;
  cfg.model.sigma = 2.0;
  cfg.model.coupling = CouplingMode::constant(1.0);

  bool phase_given = false;

  for (const auto& [section, kv] : map) {
    if (section.empty()) {
      for (const auto& [key, value] : kv) {
        if (key == "scheme")
          cfg.scheme = scheme_from_name(value);
        else if (key == "dt")
          cfg.dt = parse_double(key, value);
        else if (key == "t_max")
          cfg.t_max = parse_double(key, value);
        else if (key == "record_every")
          cfg.record_every = static_cast<int>(parse_int(key, value));
        else if (key == "blowup_threshold")
          cfg.blowup_threshold = parse_double(key, value);
        else
          throw ConfigError("unknown config key '" + key + "'");
      }
    } else if (section == "grid") {
      for (const auto& [key, value] : kv) {
        if (key == "dim")
          cfg.dim = static_cast<int>(parse_int(key, value));
        else if (key == "L")
          cfg.L = parse_double(key, value);
        else if (key == "Np")
          cfg.Np = static_cast<int>(parse_int(key, value));
        else
          throw ConfigError("unknown [grid] key '" + key + "'");
      }
    } else if (section == "profile") {
      for (const auto& [key, value] : kv) {
        if (key == "kind")
          cfg.profile.kind = profile_kind_from_name(value);
        else if (key == "C")
          cfg.profile.amplitude = parse_double(key, value);
        else if (key == "phase") {
          cfg.profile.phase = phase_kind_from_name(value);
          phase_given = true;
        } else if (key == "phase_shift")
          cfg.profile.phase_shift = parse_double(key, value);
        else if (key == "chirp_a")
          cfg.profile.chirp_a = parse_double(key, value);
        else
          throw ConfigError("unknown [profile] key '" + key + "'");
      }
    } else if (section == "model") {
      for (const auto& [key, value] : kv) {
        if (key == "n")
          cfg.model.n = static_cast<int>(parse_int(key, value));
        else if (key == "sigma")
          cfg.model.sigma = parse_double(key, value);
        else if (key == "coupling") {
          if (value == "constant")
            cfg.model.coupling.kind = CouplingMode::Kind::constant;
          else if (value == "damped")
            cfg.model.coupling.kind = CouplingMode::Kind::damped;
          else if (value == "conformal")
            cfg.model.coupling.kind = CouplingMode::Kind::conformal;
          else
            throw ConfigError("unknown coupling '" + value + "'");
        } else if (key == "lambda")
          cfg.model.coupling.lambda = parse_double(key, value);
        else if (key == "delta")
          cfg.model.coupling.delta = parse_double(key, value);
        else if (key == "conformal_a")
          cfg.model.coupling.conformal_a = parse_double(key, value);
        else
          throw ConfigError("unknown [model] key '" + key + "'");
      }
    } else if (section == "refine") {
      for (const auto& [key, value] : kv) {
        if (key == "enabled")
          cfg.refine.enabled = parse_bool(key, value);
        else if (key == "t_star_tol")
          cfg.refine.t_star_tol = parse_double(key, value);
        else if (key == "max_levels")
          cfg.refine.max_levels = static_cast<int>(parse_int(key, value));
        else
          throw ConfigError("unknown [refine] key '" + key + "'");
      }
    } else {
      throw ConfigError("unknown config section [" + section + "]");
    }
  }

  if (!phase_given) cfg.profile.phase = default_phase(cfg.profile.kind);
  // A 2D profile implies the 2D grid/model unless set explicitly.
  auto has = [&map](const char* sec, const char* key) {
    auto it = map.find(sec);
    return it != map.end() && it->second.count(key) > 0;
  };
  if (profile_dim(cfg.profile.kind) == 2) {
    if (!has("grid", "dim")) cfg.dim = 2;
    if (!has("model", "n")) cfg.model.n = 2;
  }
  return cfg;
}

}  // namespace nlsb
