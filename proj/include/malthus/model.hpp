#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Core types and closed-form relations of the two-sector economy:
// agricultural production from land / intermediates / labor, manufacturing
// as numeraire, land rent distribution, and the hierarchical household
// demand system with endogenous fertility. Everything here is a pure
// function of its arguments; regime selection lives in equilibrium.hpp.

namespace malthus {

/// Raised when the subsistence pressure makes feeding the population
/// infeasible (no fertility root exists; the cohort starves).
struct StarvationSignal : std::runtime_error {
    explicit StarvationSignal(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a numerical routine fails an internal consistency check.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exogenous constants of the model.
struct Parameters {
    double theta_z = 0.0;          // land share in agricultural production
    double theta_x = 0.0;          // intermediate-input share
    double theta_l = 0.0;          // labor share
    double g_a = 1.0;              // gross agricultural productivity growth per period
    double g_m = 1.0;              // gross manufacturing productivity growth per period
    double gamma = 0.0;            // utility weight on children
    double eta = 0.0;              // time cost per child
    double c_bar_a = 0.0;          // subsistence agricultural consumption
    double c_bar_m = 0.0;          // taste shifter on manufacturing consumption
    double mu = 0.0;               // part-time manufacturing labor fraction of farmers
    double years_per_period = 25.0;
};

/// Throws std::domain_error unless p satisfies the share simplex, the
/// part-time-labor restriction mu = theta_x / (theta_x + theta_l), and the
/// sign constraints on preferences and growth factors.
void validate_parameters(const Parameters& p);

/// The four state variables of one period plus the period index.
struct EconomyState {
    double a_a = 1.0;     // agricultural productivity level
    double a_m = 1.0;     // manufacturing productivity level
    double n_pop = 0.0;   // adult population (= number of households)
    double z_land = 1.0;  // land supply
    int t = 0;            // period index
};

void validate_state(const EconomyState& s);

enum class Regime { Starvation, Malthusian, NonMalthusian };

const char* to_string(Regime r);

/// Full static equilibrium of one period.
struct PeriodOutcome {
    Regime regime = Regime::Malthusian;
    double n_fert = 0.0;     // children per household
    double l_a = 0.0;        // agricultural labor
    double l_m = 0.0;        // full-time manufacturing labor
    double ell_a_emp = 0.0;  // L_a / [(1 - eta n) N], employment share
    double ell_a_pc = 0.0;   // L_a / N, per-adult share
    double p_a = 0.0;        // relative price of agricultural goods
    double wage = 0.0;       // wage per unit labor (= a_m)
    double rent_pc = 0.0;    // per-household land rent
    double income = 0.0;     // household income = wage + rent_pc
    double c_a = 0.0;        // agricultural consumption per household
    double c_m = 0.0;        // manufacturing consumption per household
    double x_int = 0.0;      // intermediate inputs
    double y_agr = 0.0;      // agricultural output
    double y_man = 0.0;      // manufacturing output
};

/// Cobb-Douglas agricultural output Z^tz * X^tx * (A_a L_a)^tl.
double agricultural_output(double z, double x, double a_a, double l_a,
                           const Parameters& p);

/// Dimensionless subsistence pressure K. Feeding the population at the
/// subsistence level takes the whole adult labor endowment iff K >= 1.
double subsistence_pressure(const EconomyState& s, const Parameters& p);

/// Farm labor needed to produce exactly c_bar_a * N, given that farmers
/// supply their own intermediates at X = mu * A_m * L_a. Equals
/// K^{1/(1-tz)} * N with K the subsistence pressure.
double required_farm_labor(const EconomyState& s, const Parameters& p);

/// Market price of agricultural goods implied by the intermediate-input
/// first-order condition at farm labor l_a.
double agricultural_price(double l_a, const EconomyState& s, const Parameters& p);

/// Household income y = w + rent, with the land share of farm revenue
/// spread evenly over households. l_a is the farm labor actually employed;
/// at the subsistence-clearing labor level this reduces to
/// a_m + theta_z * p_a * c_bar_a, and with all labor farming (starvation)
/// to a_m / (1 - theta_z).
double household_income(double p_a, double l_a, const EconomyState& s,
                        const Parameters& p);

struct HouseholdDemand {
    double c_a = 0.0;
    double c_m = 0.0;
    double n = 0.0;
};

/// Demand system of the hierarchical preference. Case thresholds resolve
/// downward: income exactly at a boundary takes the lower branch.
HouseholdDemand household_demand(double y, double p_a, double w, const Parameters& p);

/// ln c_a below subsistence, ln c_bar_a + (1-gamma) ln(c_m + c_bar_m)
/// + gamma ln n above it. Returns -inf for n = 0 in the upper branch.
double household_utility(double c_a, double c_m, double n, const Parameters& p);

}  // namespace malthus
