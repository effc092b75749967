#include "config_io.hpp"

#include <charconv>

namespace ecw::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw UsageError("invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("invalid boolean for " + key + ": '" + value + "'");
}

}  // namespace

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "policy") {
    if (value == "include-small") {
      cfg.policy = ConductorPolicy::IncludeSmall;
    } else if (value == "exclude-23") {
      cfg.policy = ConductorPolicy::Exclude23;
    } else {
      throw UsageError("policy must be include-small or exclude-23");
    }
  } else if (key == "nu2-manin") {
    cfg.nu2_manin = parse_number<unsigned>(key, value);
  } else if (key == "real-place") {
    cfg.solubility_real_place = parse_bool(key, value);
  } else if (key == "depth-cap-extra") {
    cfg.depth_cap_extra = parse_number<unsigned>(key, value);
  } else if (key == "workers") {
    cfg.workers = parse_number<unsigned>(key, value);
    if (cfg.workers == 0) throw UsageError("workers must be positive");
  } else if (key == "seed") {
    cfg.seed = parse_number<std::int64_t>(key, value);
  } else if (key == "cond2-single-prime") {
    cfg.cond2_single_prime = parse_bool(key, value);
  } else {
    throw UsageError("unknown configuration key '" + key + "'");
  }
}

void load_config(Config& cfg, std::istream& in) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(number) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

nlohmann::ordered_json to_json(const Config& cfg) {
  nlohmann::ordered_json j;
  j["policy"] = cfg.policy == ConductorPolicy::IncludeSmall ? "include-small" : "exclude-23";
  j["nu2_manin"] = cfg.nu2_manin;
  j["solubility_real_place"] = cfg.solubility_real_place;
  j["depth_cap_extra"] = cfg.depth_cap_extra;
  j["workers"] = cfg.workers;
  j["seed"] = cfg.seed;
  j["cond2_single_prime"] = cfg.cond2_single_prime;
  return j;
}

}  // namespace ecw::cli
