#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wavepack::cli {

std::vector<std::string> preset_names();

/// Embedded scenario config for `name`, or nullopt.
std::optional<nlohmann::json> preset_config(const std::string& name);

}  // namespace wavepack::cli
