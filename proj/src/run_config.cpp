#include "malthus/run_config.hpp"

#include <fstream>

namespace malthus {

namespace {

using nlohmann::json;

void read_double(const json& j, const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number()) throw ConfigError(std::string(key) + " must be a number");
    out = j.at(key).get<double>();
}

void read_int(const json& j, const char* key, int& out) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer())
        throw ConfigError(std::string(key) + " must be an integer");
    out = j.at(key).get<int>();
}

CalibrationInput parse_calibration(const json& j) {
    static const char* known[] = {
        "annual_malthus_pop_growth", "annual_manufacturing_growth", "gamma",
        "eta_divisor", "theta_z", "theta_x", "c_bar_a", "c_bar_m",
        "a_a0", "a_m0", "z0", "years_per_period"};
    if (!j.is_object()) throw ConfigError("calibration must be an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* name : known) ok = ok || key == name;
        if (!ok) throw ConfigError("unknown calibration field: " + key);
    }
    CalibrationInput c;
    read_double(j, "annual_malthus_pop_growth", c.annual_malthus_pop_growth);
    read_double(j, "annual_manufacturing_growth", c.annual_manufacturing_growth);
    read_double(j, "gamma", c.gamma);
    read_double(j, "eta_divisor", c.eta_divisor);
    read_double(j, "theta_z", c.theta_z);
    read_double(j, "theta_x", c.theta_x);
    read_double(j, "c_bar_a", c.c_bar_a);
    read_double(j, "c_bar_m", c.c_bar_m);
    read_double(j, "a_a0", c.a_a0);
    read_double(j, "a_m0", c.a_m0);
    read_double(j, "z0", c.z0);
    read_double(j, "years_per_period", c.years_per_period);
    return c;
}

ShockSchedule parse_shocks(const json& j) {
    if (!j.is_array()) throw ConfigError("shocks must be an array");
    ShockSchedule schedule;
    for (const json& e : j) {
        if (!e.is_object()) throw ConfigError("each shock must be an object");
        ShockEvent event;
        read_int(e, "period", event.period);
        if (!e.contains("period")) throw ConfigError("shock is missing its period");
        read_double(e, "land_multiplier", event.land_multiplier);
        read_double(e, "population_multiplier", event.population_multiplier);
        for (const auto& [key, value] : e.items())
            if (key != "period" && key != "land_multiplier" && key != "population_multiplier")
                throw ConfigError("unknown shock field: " + key);
        schedule.events.push_back(event);
    }
    try {
        schedule.validate();
    } catch (const std::domain_error& err) {
        throw ConfigError(err.what());
    }
    return schedule;
}

}  // namespace

RunConfig preset_config(const std::string& name) {
    RunConfig cfg;
    if (name == "table1" || name == "economy2") return cfg;
    if (name == "economy1") {
        cfg.shocks.events.push_back({10, kDivergenceLandMultiplier, 1.0});
        return cfg;
    }
    throw ConfigError("unknown preset '" + name + "' (expected table1, economy1 or economy2)");
}

RunConfig parse_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key != "calibration" && key != "shocks" && key != "horizon" &&
            key != "base_year" && key != "growth_window" && key != "output")
            throw ConfigError("unknown config field: " + key);
    }
    if (j.contains("calibration")) cfg.calibration = parse_calibration(j.at("calibration"));
    if (j.contains("shocks")) cfg.shocks = parse_shocks(j.at("shocks"));
    read_int(j, "horizon", cfg.horizon);
    read_int(j, "base_year", cfg.base_year);
    if (j.contains("growth_window")) {
        const json& w = j.at("growth_window");
        if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() ||
            !w[1].is_number_integer())
            throw ConfigError("growth_window must be an array of two integer periods");
        cfg.growth_from = w[0].get<int>();
        cfg.growth_to = w[1].get<int>();
    }
    if (j.contains("output")) {
        if (!j.at("output").is_string()) throw ConfigError("output must be a string");
        cfg.output = j.at("output").get<std::string>();
    }
    if (cfg.horizon < 1) throw ConfigError("horizon must be at least 1");
    if (cfg.growth_from < 0 || cfg.growth_from >= cfg.growth_to)
        throw ConfigError("growth_window must satisfy 0 <= from < to");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j;
    const CalibrationInput& c = cfg.calibration;
    j["calibration"] = {{"annual_malthus_pop_growth", c.annual_malthus_pop_growth},
                        {"annual_manufacturing_growth", c.annual_manufacturing_growth},
                        {"gamma", c.gamma},
                        {"eta_divisor", c.eta_divisor},
                        {"theta_z", c.theta_z},
                        {"theta_x", c.theta_x},
                        {"c_bar_a", c.c_bar_a},
                        {"c_bar_m", c.c_bar_m},
                        {"a_a0", c.a_a0},
                        {"a_m0", c.a_m0},
                        {"z0", c.z0},
                        {"years_per_period", c.years_per_period}};
    j["shocks"] = nlohmann::json::array();
    for (const ShockEvent& e : cfg.shocks.events)
        j["shocks"].push_back({{"period", e.period},
                               {"land_multiplier", e.land_multiplier},
                               {"population_multiplier", e.population_multiplier}});
    j["horizon"] = cfg.horizon;
    j["base_year"] = cfg.base_year;
    j["growth_window"] = {cfg.growth_from, cfg.growth_to};
    if (!cfg.output.empty()) j["output"] = cfg.output;
    return j;
}

}  // namespace malthus
