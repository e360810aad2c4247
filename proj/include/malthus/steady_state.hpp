#pragma once

#include <utility>

#include "malthus/model.hpp"

// Closed-form steady-state and threshold analytics: the stagnation growth
// rate, the detrended steady-state population, the escape and starvation
// thresholds, the existence condition for the stagnation regime, the
// sustainability bound on population growth, and the cross-economy
// productivity comparison.

namespace malthus {

struct SteadyStateReport {
    double n_ss = 0.0;                    // gross population growth factor at the steady state
    double n_tilde_ss = 0.0;              // detrended steady-state population
    double n_escape = 0.0;                // fertility at the escape threshold
    double n_tilde_escape = 0.0;          // detrended escape population
    double n_tilde_starve = 0.0;          // detrended starvation population
    double escape_ratio = 0.0;            // n_tilde_escape / n_tilde_ss
    double escape_land_multiplier = 0.0;  // minimal land shock that triggers escape
    double sustainability_bound = 0.0;    // population growth ceiling for falling farm share
    bool malthus_exists = false;          // escape_ratio < 1
};

/// Steady-state gross population growth factor g_a^{theta_l/theta_z}.
double malthus_growth(const Parameters& p);

/// Detrended population at which fertility equals the steady-state growth
/// factor. Throws std::domain_error when eta * n_ss >= 1 (infeasible
/// calibration: childcare for the steady-state cohort exceeds adult time).
double malthus_ss_population(const Parameters& p, double a_m, double a_a0, double z);

/// Fertility and detrended population at the boundary between the
/// stagnation and growth regimes. The fertility is closed-form,
/// gamma c_bar_m / ((1-gamma) eta a_m); the population follows from the
/// threshold locus, and the pair is asserted to satisfy the fertility
/// fixed-point equation to 1e-10. Throws std::domain_error when the
/// implied escape fertility is infeasible (no growth regime exists).
std::pair<double, double> escape_threshold(const Parameters& p, double a_m,
                                           double a_a0, double z);

/// Detrended population at which household income just covers the
/// subsistence food bill at zero fertility (pressure K = 1).
double starvation_population(const Parameters& p, double a_m, double a_a0, double z);

struct RegimeRatio {
    double escape_ratio = 0.0;
    bool malthus_exists = false;
};

/// n_tilde_escape / n_tilde_ss in levels (land and initial agricultural
/// productivity cancel). The stagnation regime is self-sustaining iff the
/// ratio is below one.
RegimeRatio regime_ratio(const Parameters& p, double a_m);

/// Population growth ceiling (g_m^theta_x g_a^theta_l)^{1/theta_z}; while
/// realized fertility stays below it, the per-adult farm labor share falls.
double sustainability_bound(const Parameters& p);

/// Labor and land productivity of two economies at their respective
/// steady states. Labor productivities coincide by construction; land
/// productivities differ with initial agricultural productivity and land.
struct SteadyStateComparison {
    double labor_productivity_b = 0.0;  // Y_a / L_a
    double labor_productivity_c = 0.0;
    double land_productivity_b = 0.0;   // Y_a / Z at the detrended steady state
    double land_productivity_c = 0.0;
    double land_productivity_ratio = 0.0;  // c over b
};

SteadyStateComparison compare_steady_states(const Parameters& p, double a_a0_b,
                                            double a_a0_c, double a_m, double z_b,
                                            double z_c);

/// Bundles every scalar above for one parameterization.
SteadyStateReport steady_state_report(const Parameters& p, double a_m, double a_a0,
                                      double z);

}  // namespace malthus
