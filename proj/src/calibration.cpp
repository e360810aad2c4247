#include "malthus/calibration.hpp"

#include <cmath>
#include <limits>

#include "malthus/steady_state.hpp"

namespace malthus {

Calibrated build_parameters(const CalibrationInput& c) {
    if (!(c.theta_z > 0.0 && c.theta_x > 0.0 && c.theta_z + c.theta_x < 1.0))
        throw std::domain_error("theta_z and theta_x must be positive with theta_z + theta_x < 1");
    if (!(c.annual_malthus_pop_growth >= 0.0))
        throw std::domain_error("annual population growth target must be non-negative");
    if (!(c.eta_divisor > 0.0)) throw std::domain_error("eta divisor must be positive");
    if (!(c.a_a0 > 0.0 && c.a_m0 > 0.0 && c.z0 > 0.0))
        throw std::domain_error("initial productivities and land must be positive");

    Calibrated cal;
    Parameters& p = cal.params;
    p.theta_z = c.theta_z;
    p.theta_x = c.theta_x;
    p.theta_l = 1.0 - c.theta_z - c.theta_x;
    // Annual population growth target maps to g_a through the steady-state
    // relation n_ss = g_a^{theta_l/theta_z} with n_ss per period.
    p.g_a = std::pow(1.0 + c.annual_malthus_pop_growth,
                     c.theta_z / p.theta_l * c.years_per_period);
    p.g_m = std::pow(1.0 + c.annual_manufacturing_growth, c.years_per_period);
    p.gamma = c.gamma;
    p.eta = c.gamma / c.eta_divisor;
    p.c_bar_a = c.c_bar_a;
    p.c_bar_m = c.c_bar_m;
    p.mu = c.theta_x / (c.theta_x + p.theta_l);
    p.years_per_period = c.years_per_period;
    validate_parameters(p);

    cal.initial.a_a = c.a_a0;
    cal.initial.a_m = c.a_m0;
    cal.initial.z_land = c.z0;
    cal.initial.n_pop = malthus_ss_population(p, c.a_m0, c.a_a0, c.z0);
    cal.initial.t = 0;
    return cal;
}

bool ValidationReport::all_passed() const {
    for (const ValidationCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

ValidationReport validate(const Parameters& p, const EconomyState& s0) {
    ValidationReport report;
    auto add = [&report](const std::string& name, bool ok, double value,
                         const std::string& detail) {
        report.checks.push_back({name, ok, value, detail});
    };

    const double share_sum = p.theta_z + p.theta_x + p.theta_l;
    add("share_simplex", std::abs(share_sum - 1.0) <= 1e-12 && p.theta_z > 0.0 &&
            p.theta_x > 0.0 && p.theta_l > 0.0,
        share_sum, "production shares positive and summing to one");

    add("mu_consistency", p.mu == p.theta_x / (p.theta_x + p.theta_l), p.mu,
        "part-time labor fraction equals theta_x / (theta_x + theta_l)");

    bool exists = false;
    double ratio = std::numeric_limits<double>::quiet_NaN();
    double escape_pop = 0.0;
    bool escape_feasible = false;
    try {
        const RegimeRatio r = regime_ratio(p, s0.a_m);
        ratio = r.escape_ratio;
        exists = r.malthus_exists;
        escape_pop = escape_threshold(p, s0.a_m, s0.a_a, s0.z_land).second;
        escape_feasible = true;
    } catch (const std::exception&) {
        // report-style: an uncomputable threshold is a failed check, not a throw
    }
    add("malthus_exists", escape_feasible && exists, ratio,
        "escape population below the steady-state population");
    add("escape_feasible", escape_feasible, escape_pop,
        "escape threshold exists and is positive");

    const double n_ss = malthus_growth(p);
    add("steady_state_childcare", p.eta * n_ss < 1.0, p.eta * n_ss,
        "childcare time at the steady-state fertility below the adult endowment");

    const double k0 = subsistence_pressure(s0, p);
    add("initial_pressure", k0 < 1.0, k0, "initial state can feed itself");

    return report;
}

}  // namespace malthus
