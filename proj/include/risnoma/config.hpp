#pragma once

// JSON configuration with flat dotted keys, e.g.
//
//   { "power.p_total_dbm": 20, "surfaces.n1": 30, "surfaces.n2": 30 }
//
// Omitted keys take the reference scenario defaults (SystemConfig{}).
// Unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "risnoma/linkmodel.hpp"

namespace risnoma {

/// Every key accepted by parse_config, in documentation order.
const std::vector<std::string>& config_keys();

/// Parses a JSON document. Whitespace-only text yields the defaults.
/// Throws ConfigError: key "<json>" for syntax errors, the offending key for
/// unknown keys, type mismatches and invariant violations.
SystemConfig parse_config(std::string_view json_text);

/// Reads and parses a file. Missing/unreadable file -> ConfigError("<file>").
SystemConfig load_config(const std::filesystem::path& path);

/// Serializes every key (optional ones only when set).
std::string config_to_json(const SystemConfig& cfg);

}  // namespace risnoma
