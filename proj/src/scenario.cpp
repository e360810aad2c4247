#include "malthus/scenario.hpp"

#include <cmath>

namespace malthus {

void ShockSchedule::validate() const {
    int last_period = -1;
    for (const ShockEvent& e : events) {
        if (e.period < 0) throw std::domain_error("shock period must be non-negative");
        if (e.period <= last_period)
            throw std::domain_error("shock periods must be strictly increasing");
        if (!(std::isfinite(e.land_multiplier) && e.land_multiplier > 0.0))
            throw std::domain_error("land multiplier must be positive");
        if (!(std::isfinite(e.population_multiplier) && e.population_multiplier > 0.0))
            throw std::domain_error("population multiplier must be positive");
        last_period = e.period;
    }
}

Trajectory simulate(const EconomyState& initial, const ShockSchedule& schedule,
                    int horizon, const Parameters& p, const RootFindConfig& cfg,
                    int base_year) {
    if (horizon < 1) throw std::domain_error("horizon must be at least 1");
    validate_state(initial);
    schedule.validate();

    Trajectory traj;
    traj.base_year = base_year;
    traj.years_per_period = p.years_per_period;
    traj.rows.reserve(static_cast<std::size_t>(horizon));

    EconomyState state = initial;
    std::size_t next_event = 0;
    double y0 = 0.0, x0 = 0.0, pop0 = 0.0;

    for (int t = 0; t < horizon; ++t) {
        TrajectoryRow row;
        row.before = state;
        while (next_event < schedule.events.size() &&
               schedule.events[next_event].period < state.t)
            ++next_event;  // events scheduled before the initial period are inert
        if (next_event < schedule.events.size() &&
            schedule.events[next_event].period == state.t) {
            const ShockEvent& e = schedule.events[next_event];
            row.land_shock = e.land_multiplier;
            row.pop_shock = e.population_multiplier;
            state.z_land *= e.land_multiplier;
            state.n_pop *= e.population_multiplier;
            ++next_event;
        }
        row.state = state;

        try {
            row.outcome = solve_period(state, p, cfg);
        } catch (const StarvationSignal& e) {
            throw SimulationError(state.t, e.what());
        } catch (const SolverError& e) {
            throw SimulationError(state.t, e.what());
        } catch (const std::domain_error& e) {
            throw SimulationError(state.t, e.what());
        }

        const double x_pc = row.outcome.x_int / state.n_pop;
        if (t == 0) {
            y0 = row.outcome.income;
            x0 = x_pc;
            pop0 = state.n_pop;
        }
        row.y_index = row.outcome.income / y0;
        row.x_index = x_pc / x0;
        row.pop_index = state.n_pop / pop0;
        traj.rows.push_back(row);

        state = advance(state, row.outcome, p);
        if (!(state.n_pop > 0.0)) {
            traj.halted_by_starvation = true;
            break;
        }
    }
    return traj;
}

double equivalent_population_shock(double land_multiplier) {
    if (!(std::isfinite(land_multiplier) && land_multiplier > 0.0))
        throw std::domain_error("land multiplier must be positive");
    return 1.0 / land_multiplier;
}

EconomyComparison compare_economies(const Trajectory& a, const Trajectory& b) {
    if (a.rows.size() != b.rows.size())
        throw std::domain_error("compare_economies: trajectories have different horizons");
    EconomyComparison cmp;
    cmp.income_ratio.reserve(a.rows.size());
    for (std::size_t t = 0; t < a.rows.size(); ++t) {
        const TrajectoryRow& ra = a.rows[t];
        const TrajectoryRow& rb = b.rows[t];
        if (cmp.crossing_period < 0 && rb.state.n_pop > ra.state.n_pop)
            cmp.crossing_period = static_cast<int>(t);
        cmp.income_ratio.push_back(ra.outcome.income / rb.outcome.income);
        cmp.regimes_a.push_back(ra.outcome.regime);
        cmp.regimes_b.push_back(rb.outcome.regime);
    }
    return cmp;
}

double growth_statistics(const Trajectory& traj, int from_t, int to_t) {
    const int n = static_cast<int>(traj.rows.size());
    if (from_t < 0 || to_t >= n || from_t >= to_t)
        throw std::domain_error("growth_statistics: period window out of range");
    const double y_from = traj.rows[static_cast<std::size_t>(from_t)].outcome.income;
    const double y_to = traj.rows[static_cast<std::size_t>(to_t)].outcome.income;
    const double years = traj.years_per_period * (to_t - from_t);
    return std::pow(y_to / y_from, 1.0 / years) - 1.0;
}

}  // namespace malthus
