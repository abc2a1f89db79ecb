#pragma once

#include <map>
#include <string>

#include "nlsb/harness.hpp"

namespace nlsb {

// Sections of key = value pairs; keys outside any [section] live under "".
using ConfigMap = std::map<std::string, std::map<std::string, std::string>>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap load_config_file(const std::string& path);

// Builds a RunConfig from defaults plus the map. Unknown sections or keys
// are ConfigErrors so typos cannot silently fall back to defaults.
RunConfig config_from_map(const ConfigMap& map);

double parse_double(const std::string& key, const std::string& value);
long parse_int(const std::string& key, const std::string& value);
bool parse_bool(const std::string& key, const std::string& value);

}  // namespace nlsb
