#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ecw/config.hpp"

namespace ecw::cli {

/// Bad flag value or configuration file; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies one `key=value` setting. Keys use the flag spelling without the
/// leading dashes, e.g. `depth-cap-extra`.
void apply_setting(Config& cfg, const std::string& key, const std::string& value);

/// Reads `key=value` lines; `#` starts a comment.
void load_config(Config& cfg, std::istream& in);

nlohmann::ordered_json to_json(const Config& cfg);

}  // namespace ecw::cli
