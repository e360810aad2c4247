#include "malthus/csv_report.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

namespace malthus {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Trajectory run_simulation(const RunConfig& cfg) {
    const Calibrated cal = build_parameters(cfg.calibration);
    return simulate(cal.initial, cfg.shocks, cfg.horizon, cal.params, RootFindConfig{},
                    cfg.base_year);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,year,regime,N,n,ell_a_emp,ell_a_pc,L_a,L_m,p_a,y,y_index,c_a,c_m,"
          "x_index,A_a,A_m,Z\n";
    for (const TrajectoryRow& row : traj.rows) {
        const PeriodOutcome& o = row.outcome;
        const EconomyState& s = row.state;
        os << s.t << ',' << format_double(traj.year(s.t)) << ',' << to_string(o.regime)
           << ',' << format_double(s.n_pop) << ',' << format_double(o.n_fert) << ','
           << format_double(o.ell_a_emp) << ',' << format_double(o.ell_a_pc) << ','
           << format_double(o.l_a) << ',' << format_double(o.l_m) << ','
           << format_double(o.p_a) << ',' << format_double(o.income) << ','
           << format_double(row.y_index) << ',' << format_double(o.c_a) << ','
           << format_double(o.c_m) << ',' << format_double(row.x_index) << ','
           << format_double(s.a_a) << ',' << format_double(s.a_m) << ','
           << format_double(s.z_land) << '\n';
    }
}

namespace {

double annualized_pct(double per_period, double years) {
    return (std::pow(per_period, 1.0 / years) - 1.0) * 100.0;
}

void report_line(std::ostream& os, const char* name, double value) {
    os << name << " = " << format_double(value) << '\n';
}

void report_line_rate(std::ostream& os, const char* name, double value, double years) {
    char rate[32];
    std::snprintf(rate, sizeof(rate), "%.6g", annualized_pct(value, years));
    os << name << " = " << format_double(value) << "  (" << rate << " %/yr)\n";
}

}  // namespace

void write_steady_state_text(std::ostream& os, const SteadyStateReport& r,
                             const Parameters& p) {
    const double years = p.years_per_period;
    report_line_rate(os, "n_ss", r.n_ss, years);
    report_line_rate(os, "n_escape", r.n_escape, years);
    report_line(os, "n_tilde_ss", r.n_tilde_ss);
    report_line(os, "n_tilde_escape", r.n_tilde_escape);
    report_line(os, "n_tilde_starve", r.n_tilde_starve);
    report_line(os, "starve_ratio", r.n_tilde_starve / r.n_tilde_ss);
    report_line(os, "escape_ratio", r.escape_ratio);
    report_line(os, "escape_land_multiplier", r.escape_land_multiplier);
    report_line_rate(os, "sustainability_bound", r.sustainability_bound, years);
    os << "malthus_exists = " << (r.malthus_exists ? "true" : "false") << '\n';
}

void write_comparison_text(std::ostream& os, const EconomyComparison& cmp) {
    if (cmp.crossing_period >= 0)
        os << "population crossing at t = " << cmp.crossing_period << '\n';
    else
        os << "no population crossing\n";
    os << "t,regime_a,regime_b,income_ratio\n";
    for (std::size_t t = 0; t < cmp.income_ratio.size(); ++t)
        os << t << ',' << to_string(cmp.regimes_a[t]) << ',' << to_string(cmp.regimes_b[t])
           << ',' << format_double(cmp.income_ratio[t]) << '\n';
}

const std::vector<std::string>& sweepable_parameters() {
    static const std::vector<std::string> names = {
        "annual_malthus_pop_growth", "annual_manufacturing_growth", "gamma",
        "eta_divisor", "theta_z", "theta_x", "c_bar_a", "c_bar_m",
        "a_a0", "a_m0", "z0", "years_per_period", "land_multiplier"};
    return names;
}

namespace {

RunConfig config_for_cell(const RunConfig& base, const std::string& param, double value) {
    RunConfig cfg = base;
    CalibrationInput& c = cfg.calibration;
    if (param == "annual_malthus_pop_growth") c.annual_malthus_pop_growth = value;
    else if (param == "annual_manufacturing_growth") c.annual_manufacturing_growth = value;
    else if (param == "gamma") c.gamma = value;
    else if (param == "eta_divisor") c.eta_divisor = value;
    else if (param == "theta_z") c.theta_z = value;
    else if (param == "theta_x") c.theta_x = value;
    else if (param == "c_bar_a") c.c_bar_a = value;
    else if (param == "c_bar_m") c.c_bar_m = value;
    else if (param == "a_a0") c.a_a0 = value;
    else if (param == "a_m0") c.a_m0 = value;
    else if (param == "z0") c.z0 = value;
    else if (param == "years_per_period") c.years_per_period = value;
    else if (param == "land_multiplier") {
        // A single land shock of the given size, at the period of the first
        // configured event (period 10 when the schedule is empty).
        int period = 10;
        if (!base.shocks.events.empty()) period = base.shocks.events.front().period;
        cfg.shocks.events = {{period, value, 1.0}};
    }
    return cfg;
}

SweepCell compute_cell(const RunConfig& base, const std::string& param, double value) {
    SweepCell cell;
    cell.value = value;
    const RunConfig cfg = config_for_cell(base, param, value);
    const Calibrated cal = build_parameters(cfg.calibration);
    try {
        cell.ss = steady_state_report(cal.params, cal.initial.a_m, cal.initial.a_a,
                                      cal.initial.z_land);
        cell.ss_valid = true;
    } catch (const std::domain_error&) {
        cell.ss_valid = false;  // no growth regime for this cell
    }
    const Trajectory traj = simulate(cal.initial, cfg.shocks, cfg.horizon, cal.params,
                                     RootFindConfig{}, cfg.base_year);
    cell.final_regime = traj.rows.back().outcome.regime;
    for (std::size_t t = 0; t < traj.rows.size(); ++t) {
        if (traj.rows[t].outcome.regime == Regime::NonMalthusian) {
            cell.escape_period = static_cast<int>(t);
            break;
        }
    }
    const int last = static_cast<int>(traj.rows.size()) - 1;
    const int from = std::min(base.growth_from, last);
    const int to = std::min(base.growth_to, last);
    cell.annual_growth = from < to ? growth_statistics(traj, from, to)
                                   : std::numeric_limits<double>::quiet_NaN();
    return cell;
}

}  // namespace

std::vector<SweepCell> run_sweep(const RunConfig& base, const std::string& param,
                                 const std::vector<double>& grid) {
    bool known = false;
    for (const std::string& name : sweepable_parameters()) known = known || name == param;
    if (!known) {
        std::string names;
        for (const std::string& name : sweepable_parameters())
            names += (names.empty() ? "" : ", ") + name;
        throw ConfigError("unknown sweep parameter '" + param + "' (valid: " + names + ")");
    }
    if (grid.empty()) throw ConfigError("sweep grid must not be empty");

    std::vector<SweepCell> cells(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(grid.size())));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < grid.size(); i += workers) {
                try {
                    cells[i] = compute_cell(base, param, grid[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return cells;
}

void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepCell>& cells) {
    os << "param,value,final_regime,escape_period,annual_income_growth,n_ss,"
          "n_tilde_ss,n_escape,n_tilde_escape,n_tilde_starve,escape_ratio,"
          "escape_land_multiplier,sustainability_bound,malthus_exists\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const SweepCell& cell : cells) {
        const SteadyStateReport& ss = cell.ss;
        os << param << ',' << format_double(cell.value) << ','
           << to_string(cell.final_regime) << ',';
        if (cell.escape_period >= 0)
            os << cell.escape_period;
        else
            os << "none";
        os << ',' << format_double(cell.annual_growth) << ','
           << format_double(cell.ss_valid ? ss.n_ss : nan) << ','
           << format_double(cell.ss_valid ? ss.n_tilde_ss : nan) << ','
           << format_double(cell.ss_valid ? ss.n_escape : nan) << ','
           << format_double(cell.ss_valid ? ss.n_tilde_escape : nan) << ','
           << format_double(cell.ss_valid ? ss.n_tilde_starve : nan) << ','
           << format_double(cell.ss_valid ? ss.escape_ratio : nan) << ','
           << format_double(cell.ss_valid ? ss.escape_land_multiplier : nan) << ','
           << format_double(cell.ss_valid ? ss.sustainability_bound : nan) << ','
           << (cell.ss_valid && ss.malthus_exists ? "true" : "false") << '\n';
    }
}

}  // namespace malthus
