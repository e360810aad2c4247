#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "malthus/run_config.hpp"
#include "malthus/scenario.hpp"
#include "malthus/steady_state.hpp"

// Rendering and the sweep harness: trajectory CSV (17-significant-digit,
// comma-separated, LF line endings), steady-state text reports, economy
// comparisons, and per-cell parameter sweeps.

namespace malthus {

/// Shortest fixed formatting that round-trips binary64 ("%.17g").
std::string format_double(double v);

/// Builds parameters from the config and runs the configured scenario.
Trajectory run_simulation(const RunConfig& cfg);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

void write_steady_state_text(std::ostream& os, const SteadyStateReport& r,
                             const Parameters& p);

void write_comparison_text(std::ostream& os, const EconomyComparison& cmp);

struct SweepCell {
    double value = 0.0;
    Regime final_regime = Regime::Malthusian;
    int escape_period = -1;      // first non-Malthusian period, -1 if none
    double annual_growth = 0.0;  // over the configured growth window, clamped
    bool ss_valid = false;       // steady-state diagnostics computable
    SteadyStateReport ss;
};

/// Names accepted by run_sweep: every calibration field plus
/// "land_multiplier" (magnitude of a single land shock).
const std::vector<std::string>& sweepable_parameters();

/// Runs one simulation per grid value, varying `param`. Cells are
/// independent and may be computed concurrently; results are ordered by
/// grid index. Throws ConfigError for unknown parameter names or an empty
/// grid.
std::vector<SweepCell> run_sweep(const RunConfig& base, const std::string& param,
                                 const std::vector<double>& grid);

void write_sweep_csv(std::ostream& os, const std::string& param,
                     const std::vector<SweepCell>& cells);

}  // namespace malthus
