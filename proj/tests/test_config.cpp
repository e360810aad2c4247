#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "malthus/csv_report.hpp"
#include "malthus/run_config.hpp"

using namespace malthus;

TEST_CASE("presets") {
    const RunConfig table1 = preset_config("table1");
    CHECK(table1.shocks.events.empty());
    CHECK(table1.horizon == 26);
    CHECK(table1.base_year == 1500);
    CHECK(table1.growth_from == 10);
    CHECK(table1.growth_to == 20);

    const RunConfig e1 = preset_config("economy1");
    REQUIRE(e1.shocks.events.size() == 1);
    CHECK(e1.shocks.events[0].period == 10);
    CHECK(e1.shocks.events[0].land_multiplier == 2.74);
    CHECK(e1.shocks.events[0].population_multiplier == 1.0);

    const RunConfig e2 = preset_config("economy2");
    CHECK(e2 == table1);

    CHECK_THROWS_AS(preset_config("economy3"), ConfigError);
}

TEST_CASE("config parsing accepts the documented schema") {
    const auto j = nlohmann::json::parse(R"({
        "calibration": {"c_bar_m": 0.9, "annual_malthus_pop_growth": 0.0027},
        "shocks": [{"period": 10, "land_multiplier": 2.74},
                   {"period": 12, "population_multiplier": 0.5}],
        "horizon": 30,
        "base_year": 1525,
        "growth_window": [8, 22],
        "output": "run.csv"
    })");
    const RunConfig cfg = parse_config(j);
    CHECK(cfg.calibration.c_bar_m == 0.9);
    CHECK(cfg.calibration.annual_malthus_pop_growth == 0.0027);
    CHECK(cfg.calibration.gamma == 0.20);  // untouched default
    REQUIRE(cfg.shocks.events.size() == 2);
    CHECK(cfg.shocks.events[0].land_multiplier == 2.74);
    CHECK(cfg.shocks.events[0].population_multiplier == 1.0);
    CHECK(cfg.shocks.events[1].population_multiplier == 0.5);
    CHECK(cfg.horizon == 30);
    CHECK(cfg.base_year == 1525);
    CHECK(cfg.growth_from == 8);
    CHECK(cfg.growth_to == 22);
    CHECK(cfg.output == "run.csv");
}

TEST_CASE("config parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"([1,2])")), ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"horzion": 26})")), ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"horizon": "26"})")), ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"horizon": 0})")), ConfigError);
    CHECK_THROWS_AS(
        parse_config(nlohmann::json::parse(R"({"calibration": {"mu": 0.7}})")), ConfigError);
    CHECK_THROWS_AS(
        parse_config(nlohmann::json::parse(R"({"growth_window": [10]})")), ConfigError);
    CHECK_THROWS_AS(
        parse_config(nlohmann::json::parse(R"({"growth_window": [20, 10]})")), ConfigError);
    CHECK_THROWS_AS(
        parse_config(nlohmann::json::parse(R"({"shocks": [{"land_multiplier": 2.0}]})")),
        ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(
                        R"({"shocks": [{"period": 3}, {"period": 3}]})")),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(
                        R"({"shocks": [{"period": 3, "land_multiplier": 0.0}]})")),
                    ConfigError);
}

TEST_CASE("config round-trips bit-exactly") {
    RunConfig cfg = preset_config("economy1");
    cfg.calibration.c_bar_m = 0.1 + 0.2;  // deliberately non-representable decimal
    cfg.calibration.annual_malthus_pop_growth = 1e-17;
    cfg.calibration.a_a0 = 6.02e23;
    cfg.horizon = 41;
    cfg.growth_from = 3;
    cfg.growth_to = 19;
    cfg.output = "x.csv";
    cfg.shocks.events.push_back({17, 1.0, 0.36496350364963503});

    const std::string dumped = to_json(cfg).dump();
    const RunConfig back = parse_config(nlohmann::json::parse(dumped));
    CHECK(back == cfg);

    // parameters rebuilt from the round-tripped config match bit for bit
    const Parameters a = build_parameters(cfg.calibration).params;
    const Parameters b = build_parameters(back.calibration).params;
    CHECK(a.theta_z == b.theta_z);
    CHECK(a.theta_x == b.theta_x);
    CHECK(a.theta_l == b.theta_l);
    CHECK(a.g_a == b.g_a);
    CHECK(a.g_m == b.g_m);
    CHECK(a.gamma == b.gamma);
    CHECK(a.eta == b.eta);
    CHECK(a.c_bar_a == b.c_bar_a);
    CHECK(a.c_bar_m == b.c_bar_m);
    CHECK(a.mu == b.mu);
    CHECK(a.years_per_period == b.years_per_period);
}

TEST_CASE("trajectory csv layout") {
    const RunConfig cfg = preset_config("economy1");
    const Trajectory traj = run_simulation(cfg);
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    const std::string csv = os.str();

    CHECK(csv.rfind("t,year,regime,N,n,ell_a_emp,ell_a_pc,L_a,L_m,p_a,y,y_index,c_a,c_m,"
                    "x_index,A_a,A_m,Z\n",
                    0) == 0);
    std::size_t lines = 0;
    for (const char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 27);  // header + 26 periods
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("NonMalthusian") != std::string::npos);
    CHECK(csv.find("1750") != std::string::npos);

    // 17-significant-digit round trip
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.74) == "2.7400000000000002");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("sweep over the land multiplier locates the escape threshold") {
    const RunConfig base = preset_config("table1");
    const std::vector<double> grid = {2.0, 2.45, 2.46, 2.74};
    const std::vector<SweepCell> cells = run_sweep(base, "land_multiplier", grid);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].escape_period == -1);
    CHECK(cells[1].escape_period == -1);
    CHECK(cells[2].escape_period == 10);
    CHECK(cells[3].escape_period == 10);
    CHECK(cells[0].final_regime == Regime::Malthusian);
    CHECK(cells[3].final_regime == Regime::NonMalthusian);
    CHECK(cells[3].annual_growth > 0.018);
    for (const SweepCell& cell : cells) {
        CHECK(cell.ss_valid);
        CHECK(cell.ss.malthus_exists);
    }

    std::ostringstream os;
    write_sweep_csv(os, "land_multiplier", cells);
    const std::string csv = os.str();
    CHECK(csv.find("land_multiplier,2.4500000000000002,Malthusian,none") !=
          std::string::npos);
}

TEST_CASE("sweep over the taste shifter brackets the existence boundary") {
    const RunConfig base = preset_config("table1");
    const std::vector<SweepCell> cells =
        run_sweep(base, "c_bar_m", {0.5, 0.86, 1.35});
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].ss_valid);
    CHECK_FALSE(cells[0].ss.malthus_exists);
    CHECK(std::abs(cells[1].ss.escape_ratio - 1.0) < 0.01);  // near the boundary
    CHECK(cells[2].ss.malthus_exists);
}

TEST_CASE("sweep input validation") {
    const RunConfig base = preset_config("table1");
    CHECK_THROWS_AS(run_sweep(base, "land_multiplier", {}), ConfigError);
    CHECK_THROWS_AS(run_sweep(base, "not_a_parameter", {1.0}), ConfigError);
    try {
        run_sweep(base, "not_a_parameter", {1.0});
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("c_bar_m") != std::string::npos);
    }
}
