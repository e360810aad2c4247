#pragma once

#include <string>
#include <vector>

#include "malthus/model.hpp"

// Baseline parameterization and its validation. Every derived constant is
// computed from primitives at build time, so alternates (a different annual
// population growth target, say) are one-line changes to the input.

namespace malthus {

/// Primitive calibration targets. Defaults reproduce the baseline economy:
/// 0.35%/yr population growth in the stagnation steady state, 2%/yr
/// manufacturing productivity growth, and the cost-share split of the
/// agricultural production function.
struct CalibrationInput {
    double annual_malthus_pop_growth = 0.0035;
    double annual_manufacturing_growth = 0.02;
    double gamma = 0.20;
    double eta_divisor = 1.02;  // eta = gamma / eta_divisor
    double theta_z = 0.16;
    double theta_x = 0.60;
    double c_bar_a = 0.25;
    double c_bar_m = 1.35;
    double a_a0 = 1.0;
    double a_m0 = 1.0;
    double z0 = 1.0;
    double years_per_period = 25.0;

    bool operator==(const CalibrationInput&) const = default;
};

/// Land-supply multiplier of the divergence experiment: coal plus New World
/// imports measured in land-equivalent acres, relative to the domestic crop
/// and pasture area.
inline constexpr double kDivergenceLandMultiplier = 2.74;

struct Calibrated {
    Parameters params;
    EconomyState initial;  // economy starts at its detrended steady-state population
};

/// Derives the full parameter set (theta_l, g_a, g_m, eta, mu) and the
/// initial state from the primitives. Throws std::domain_error on invalid
/// primitives.
Calibrated build_parameters(const CalibrationInput& c);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;  // the quantity the check looked at
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

/// Report-style validation of the joint restrictions: share simplex, the
/// part-time-labor identity, existence of the stagnation regime, a feasible
/// escape threshold, feasible steady-state childcare time, and an initial
/// state below the starvation boundary.
ValidationReport validate(const Parameters& p, const EconomyState& s0);

}  // namespace malthus
