// Command-line driver: steady-state analytics, scenario simulation, parameter
// sweeps, and two-economy comparisons. Exit codes: 0 success, 2 configuration
// error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "malthus/csv_report.hpp"
#include "malthus/run_config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::vector<std::string> presets;
    std::vector<std::string> configs;
    std::string out;
    std::optional<int> horizon;
    std::optional<int> base_year;
    std::string growth_window;
    std::string param;
    std::string grid;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--preset", opts.presets, "named preset: table1, economy1, economy2");
    cmd->add_option("--config", opts.configs, "path to a JSON run configuration");
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_option("--horizon", opts.horizon, "number of periods to simulate");
    cmd->add_option("--base-year", opts.base_year, "calendar year of period 0");
    cmd->add_option("--growth-window", opts.growth_window,
                    "periods T0:T1 for the annualized growth statistic");
}

std::vector<malthus::RunConfig> resolve_configs(const CommonOpts& opts, std::size_t want) {
    std::vector<malthus::RunConfig> configs;
    for (const std::string& name : opts.presets)
        configs.push_back(malthus::preset_config(name));
    for (const std::string& path : opts.configs)
        configs.push_back(malthus::load_config_file(path));
    if (configs.empty()) configs.push_back(malthus::RunConfig{});
    if (configs.size() != want)
        throw malthus::ConfigError("expected " + std::to_string(want) +
                                   " configuration(s), got " + std::to_string(configs.size()));
    for (malthus::RunConfig& cfg : configs) {
        if (opts.horizon) cfg.horizon = *opts.horizon;
        if (opts.base_year) cfg.base_year = *opts.base_year;
        if (!opts.growth_window.empty()) {
            int from = 0, to = 0;
            if (std::sscanf(opts.growth_window.c_str(), "%d:%d", &from, &to) != 2 ||
                from < 0 || from >= to)
                throw malthus::ConfigError("--growth-window expects T0:T1 with 0 <= T0 < T1");
            cfg.growth_from = from;
            cfg.growth_to = to;
        }
        if (!opts.out.empty()) cfg.output = opts.out;
        if (cfg.horizon < 1) throw malthus::ConfigError("horizon must be at least 1");
    }
    return configs;
}

std::vector<double> parse_grid(const std::string& grid) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < grid.size()) {
        std::size_t next = grid.find(',', pos);
        if (next == std::string::npos) next = grid.size();
        const std::string token = grid.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw malthus::ConfigError("bad grid value: '" + token + "'");
        }
        pos = next + 1;
    }
    return values;
}

// Writes through a stream chosen by `path` ("" means stdout).
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) {
        std::cerr << "error: cannot open output path: " << path << '\n';
        return kExitConfig;
    }
    fn(out);
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing output: " << path << '\n';
        return kExitNumerical;
    }
    return 0;
}

int cmd_steady_state(const CommonOpts& opts) {
    const malthus::RunConfig cfg = resolve_configs(opts, 1).front();
    const malthus::Calibrated cal = malthus::build_parameters(cfg.calibration);
    const malthus::SteadyStateReport report = malthus::steady_state_report(
        cal.params, cal.initial.a_m, cal.initial.a_a, cal.initial.z_land);
    return with_output(cfg.output, [&](std::ostream& os) {
        malthus::write_steady_state_text(os, report, cal.params);
    });
}

int cmd_simulate(const CommonOpts& opts) {
    const malthus::RunConfig cfg = resolve_configs(opts, 1).front();
    const malthus::Trajectory traj = malthus::run_simulation(cfg);
    return with_output(cfg.output, [&](std::ostream& os) {
        malthus::write_trajectory_csv(os, traj);
    });
}

int cmd_sweep(const CommonOpts& opts) {
    const malthus::RunConfig cfg = resolve_configs(opts, 1).front();
    if (opts.param.empty()) throw malthus::ConfigError("--param is required for sweep");
    const std::vector<double> grid = parse_grid(opts.grid);
    const std::vector<malthus::SweepCell> cells = malthus::run_sweep(cfg, opts.param, grid);
    return with_output(cfg.output, [&](std::ostream& os) {
        malthus::write_sweep_csv(os, opts.param, cells);
    });
}

int cmd_compare(const CommonOpts& opts) {
    const std::vector<malthus::RunConfig> cfgs = resolve_configs(opts, 2);
    const malthus::Trajectory traj_a = malthus::run_simulation(cfgs[0]);
    const malthus::Trajectory traj_b = malthus::run_simulation(cfgs[1]);
    const malthus::EconomyComparison cmp = malthus::compare_economies(traj_a, traj_b);
    malthus::write_comparison_text(std::cout, cmp);
    if (!opts.out.empty()) {
        const int rc_a = with_output(opts.out + "-1.csv", [&](std::ostream& os) {
            malthus::write_trajectory_csv(os, traj_a);
        });
        if (rc_a != 0) return rc_a;
        return with_output(opts.out + "-2.csv", [&](std::ostream& os) {
            malthus::write_trajectory_csv(os, traj_b);
        });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-sector growth simulator with endogenous fertility"};
    app.require_subcommand(1);

    CommonOpts steady_opts, sim_opts, sweep_opts, compare_opts;
    CLI::App* steady = app.add_subcommand("steady-state",
                                          "print steady-state levels and thresholds");
    add_common(steady, steady_opts);
    CLI::App* sim = app.add_subcommand("simulate", "run one scenario and write a CSV");
    add_common(sim, sim_opts);
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep over one parameter");
    add_common(sweep, sweep_opts);
    sweep->add_option("--param", sweep_opts.param, "parameter to vary");
    sweep->add_option("--grid", sweep_opts.grid, "comma-separated grid values");
    CLI::App* compare = app.add_subcommand("compare", "compare two configurations");
    add_common(compare, compare_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (steady->parsed()) return cmd_steady_state(steady_opts);
        if (sim->parsed()) return cmd_simulate(sim_opts);
        if (sweep->parsed()) return cmd_sweep(sweep_opts);
        return cmd_compare(compare_opts);
    } catch (const malthus::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        // Domain errors surfacing here come from configuration values, not
        // from inside a simulation (those arrive wrapped with their period).
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
