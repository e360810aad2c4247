#include "malthus/steady_state.hpp"

#include <cmath>

#include "malthus/equilibrium.hpp"

namespace malthus {

double malthus_growth(const Parameters& p) {
    return std::pow(p.g_a, p.theta_l / p.theta_z);
}

double malthus_ss_population(const Parameters& p, double a_m, double a_a0, double z) {
    const double n_ss = malthus_growth(p);
    if (!(p.eta * n_ss < 1.0))
        throw std::domain_error("steady-state childcare time exceeds the adult endowment");
    const double base = std::pow(p.mu, p.theta_x) / p.c_bar_a *
                        std::pow(1.0 - p.eta * n_ss, 1.0 - p.theta_z) *
                        std::pow(z, p.theta_z) * std::pow(a_m, p.theta_x) *
                        std::pow(a_a0, p.theta_l);
    return std::pow(base, 1.0 / p.theta_z);
}

std::pair<double, double> escape_threshold(const Parameters& p, double a_m,
                                           double a_a0, double z) {
    const double n_escape = p.gamma * p.c_bar_m / ((1.0 - p.gamma) * p.eta * a_m);
    if (!(p.eta * n_escape < 1.0))
        throw std::domain_error("no non-Malthusian region: escape fertility infeasible");
    const double bracket = (1.0 - p.theta_z * p.eta * n_escape) -
                           p.theta_x / p.mu * p.gamma / (1.0 - p.gamma) * p.c_bar_m / a_m;
    const double base = bracket * std::pow(p.mu, p.theta_x) / p.c_bar_a *
                        std::pow(z, p.theta_z) * std::pow(a_m, p.theta_x) *
                        std::pow(a_a0, p.theta_l) /
                        std::pow(1.0 - p.eta * n_escape, p.theta_z);
    if (!(base > 0.0))
        throw std::domain_error("no non-Malthusian region: escape population not positive");
    const double n_tilde_escape = std::pow(base, 1.0 / p.theta_z);

    // The pair must jointly satisfy the fertility fixed-point equation.
    EconomyState at_escape{a_a0, a_m, n_tilde_escape, z, 0};
    const double k = subsistence_pressure(at_escape, p);
    if (std::abs(fertility_residual(n_escape, k, p)) >= 1e-10)
        throw SolverError("escape threshold failed the joint-system residual check");
    return {n_escape, n_tilde_escape};
}

double starvation_population(const Parameters& p, double a_m, double a_a0, double z) {
    return z * std::pow(std::pow(p.mu, p.theta_x) * std::pow(a_m, p.theta_x) *
                            std::pow(a_a0, p.theta_l) / p.c_bar_a,
                        1.0 / p.theta_z);
}

RegimeRatio regime_ratio(const Parameters& p, double a_m) {
    RegimeRatio r;
    r.escape_ratio = escape_threshold(p, a_m, 1.0, 1.0).second /
                     malthus_ss_population(p, a_m, 1.0, 1.0);
    r.malthus_exists = r.escape_ratio < 1.0;
    return r;
}

double sustainability_bound(const Parameters& p) {
    return std::pow(std::pow(p.g_m, p.theta_x) * std::pow(p.g_a, p.theta_l),
                    1.0 / p.theta_z);
}

SteadyStateComparison compare_steady_states(const Parameters& p, double a_a0_b,
                                            double a_a0_c, double a_m, double z_b,
                                            double z_c) {
    const double n_ss = malthus_growth(p);
    const double labor_share = 1.0 - p.eta * n_ss;  // L_a / N at the steady state
    SteadyStateComparison cmp;
    // Output clears at c_bar_a per household, so Y_a / L_a = c_bar_a / labor_share
    // in any steady state.
    cmp.labor_productivity_b = p.c_bar_a / labor_share;
    cmp.labor_productivity_c = p.c_bar_a / labor_share;
    const double pop_b = malthus_ss_population(p, a_m, a_a0_b, z_b);
    const double pop_c = malthus_ss_population(p, a_m, a_a0_c, z_c);
    cmp.land_productivity_b = p.c_bar_a * pop_b / z_b;
    cmp.land_productivity_c = p.c_bar_a * pop_c / z_c;
    cmp.land_productivity_ratio = cmp.land_productivity_c / cmp.land_productivity_b;
    return cmp;
}

SteadyStateReport steady_state_report(const Parameters& p, double a_m, double a_a0,
                                      double z) {
    SteadyStateReport r;
    r.n_ss = malthus_growth(p);
    r.n_tilde_ss = malthus_ss_population(p, a_m, a_a0, z);
    const auto [n_esc, pop_esc] = escape_threshold(p, a_m, a_a0, z);
    r.n_escape = n_esc;
    r.n_tilde_escape = pop_esc;
    r.n_tilde_starve = starvation_population(p, a_m, a_a0, z);
    r.escape_ratio = r.n_tilde_escape / r.n_tilde_ss;
    r.escape_land_multiplier = 1.0 / r.escape_ratio;
    r.sustainability_bound = sustainability_bound(p);
    r.malthus_exists = r.escape_ratio < 1.0;
    return r;
}

}  // namespace malthus
