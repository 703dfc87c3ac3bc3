#include "gsketch/constants.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gsketch {

namespace {

using Field = double Constants::*;

constexpr std::array<std::pair<const char*, Field>, 6> kFields{{
    {"c_detect", &Constants::c_detect},
    {"c_large", &Constants::c_large},
    {"c_sample", &Constants::c_sample},
    {"c_err", &Constants::c_err},
    {"c_choke", &Constants::c_choke},
    {"c_heavy", &Constants::c_heavy},
}};

double parse_positive(std::string_view text, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0))
    throw std::invalid_argument(what + ": expected a positive number, got '" + std::string(text) + "'");
  return value;
}

std::string env_name(const char* key) {
  std::string name = "GSKETCH_";
  for (const char* c = key; *c; ++c) name += static_cast<char>(*c >= 'a' && *c <= 'z' ? *c - 'a' + 'A' : *c);
  return name;
}

}  // namespace

Constants Constants::from_env() {
  Constants c;
  for (const auto& [key, field] : kFields) {
    const std::string name = env_name(key);
    if (const char* v = std::getenv(name.c_str()); v && *v) c.*field = parse_positive(v, name);
  }
  return c;
}

void Constants::apply_overrides(std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("constant override '" + std::string(item) + "' lacks '='");
    const auto key = item.substr(0, eq);
    bool found = false;
    for (const auto& [name, field] : kFields) {
      if (key == name) {
        this->*field = parse_positive(item.substr(eq + 1), std::string(key));
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown constant '" + std::string(key) + "'");
  }
}

std::string Constants::describe() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, field] : kFields) {
    out << (first ? "" : ",") << key << '=' << this->*field;
    first = false;
  }
  return out.str();
}

}  // namespace gsketch
