#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "malthus/equilibrium.hpp"
#include "malthus/model.hpp"

// Multi-period simulation with timed multiplicative shocks to land supply
// and population, plus the derived normalized series and cross-economy
// comparison statistics.

namespace malthus {

/// A solver failure inside a simulation, tagged with the period it hit.
struct SimulationError : std::runtime_error {
    SimulationError(int period_, const std::string& msg)
        : std::runtime_error("period " + std::to_string(period_) + ": " + msg),
          period(period_) {}
    int period;
};

struct ShockEvent {
    int period = 0;
    double land_multiplier = 1.0;
    double population_multiplier = 1.0;

    bool operator==(const ShockEvent&) const = default;
};

struct ShockSchedule {
    std::vector<ShockEvent> events;

    /// Throws std::domain_error unless periods are strictly increasing and
    /// non-negative and every multiplier is positive and finite.
    void validate() const;

    bool operator==(const ShockSchedule&) const = default;
};

struct TrajectoryRow {
    EconomyState before;    // state entering the period, pre-shock
    double land_shock = 1.0;
    double pop_shock = 1.0;
    EconomyState state;     // post-shock state the period was solved at
    PeriodOutcome outcome;
    double y_index = 1.0;   // income / period-0 income
    double x_index = 1.0;   // per-adult intermediates / period-0 value
    double pop_index = 1.0; // population / period-0 population
};

struct Trajectory {
    std::vector<TrajectoryRow> rows;
    bool halted_by_starvation = false;  // population hit zero before the horizon
    int base_year = 1500;
    double years_per_period = 25.0;

    double year(int t) const { return base_year + years_per_period * t; }
};

/// Runs `horizon` periods from `initial`. Scheduled multipliers apply to
/// (Z, N) before the period they name is solved, so the shock period itself
/// is computed under the new values. Halts early once population reaches
/// zero (the final row then carries the starvation outcome). Identical
/// inputs produce bit-identical trajectories.
Trajectory simulate(const EconomyState& initial, const ShockSchedule& schedule,
                    int horizon, const Parameters& p, const RootFindConfig& cfg = {},
                    int base_year = 1500);

/// Population multiplier with the same per-household effect as scaling land
/// by `land_multiplier` (scale invariance of the equilibrium in (Z, N)).
double equivalent_population_shock(double land_multiplier);

struct EconomyComparison {
    int crossing_period = -1;           // first t with pop_b > pop_a, -1 if none
    std::vector<double> income_ratio;   // income_a / income_b per period
    std::vector<Regime> regimes_a;
    std::vector<Regime> regimes_b;
};

/// Per-period comparison of two equal-horizon trajectories.
/// Throws std::domain_error on mismatched horizons.
EconomyComparison compare_economies(const Trajectory& a, const Trajectory& b);

/// Annualized per-capita income growth between two periods of a trajectory:
/// (y_to / y_from)^(1 / (years_per_period * (to - from))) - 1.
double growth_statistics(const Trajectory& traj, int from_t, int to_t);

}  // namespace malthus
