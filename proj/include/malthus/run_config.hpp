#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "malthus/calibration.hpp"
#include "malthus/scenario.hpp"

// Run configuration: JSON file schema, named presets, and round-trippable
// serialization. Numeric literals parse and re-serialize as exact binary64.

namespace malthus {

/// Invalid configuration input (bad JSON, unknown keys, invalid values).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
    CalibrationInput calibration;
    ShockSchedule shocks;
    int horizon = 26;
    int base_year = 1500;
    int growth_from = 10;  // window for the annualized income growth statistic
    int growth_to = 20;
    std::string output;    // CSV path; empty means stdout / command default

    bool operator==(const RunConfig&) const = default;
};

/// Named baseline configurations: "table1" (no shocks), "economy1" (land
/// times 2.74 at period 10), "economy2" (counterfactual twin of economy1,
/// no shocks). Throws ConfigError for unknown names.
RunConfig preset_config(const std::string& name);

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace malthus
