#pragma once

// Strict JSON scenario files. The top level must carry "schema": 1; every
// other section is optional and falls back to the baseline scenario, but
// unknown keys anywhere are rejected so that misspelled parameters fail
// loudly instead of silently using defaults.

#include "spares/scenario.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace spares {

inline constexpr int kConfigSchema = 1;

ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig load_config(const std::string& path);

/// Full, explicit config document (inclination emitted in degrees).
nlohmann::json config_to_json(const ScenarioConfig& config);

}  // namespace spares
