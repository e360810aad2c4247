#include "malthus/model.hpp"

#include <cmath>
#include <limits>

namespace malthus {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void validate_parameters(const Parameters& p) {
    if (!(p.theta_z > 0.0 && p.theta_x > 0.0 && p.theta_l > 0.0))
        throw std::domain_error("production shares must be positive");
    if (std::abs(p.theta_z + p.theta_x + p.theta_l - 1.0) > 1e-12)
        throw std::domain_error("production shares must sum to one");
    if (p.mu != p.theta_x / (p.theta_x + p.theta_l))
        throw std::domain_error("mu must equal theta_x / (theta_x + theta_l)");
    if (!(p.eta > 0.0 && p.eta < 1.0)) throw std::domain_error("eta must lie in (0,1)");
    if (!(p.gamma > 0.0 && p.gamma < 1.0)) throw std::domain_error("gamma must lie in (0,1)");
    if (!(p.c_bar_a > 0.0)) throw std::domain_error("c_bar_a must be positive");
    if (!(p.c_bar_m > 0.0)) throw std::domain_error("c_bar_m must be positive");
    if (!(p.g_a >= 1.0)) throw std::domain_error("g_a must be >= 1");
    if (!(p.g_m > 0.0)) throw std::domain_error("g_m must be positive");
    if (!(p.years_per_period > 0.0)) throw std::domain_error("years_per_period must be positive");
}

void validate_state(const EconomyState& s) {
    if (!(std::isfinite(s.a_a) && s.a_a > 0.0)) throw std::domain_error("a_a must be positive");
    if (!(std::isfinite(s.a_m) && s.a_m > 0.0)) throw std::domain_error("a_m must be positive");
    if (!(std::isfinite(s.z_land) && s.z_land > 0.0))
        throw std::domain_error("z_land must be positive");
    if (!(std::isfinite(s.n_pop) && s.n_pop >= 0.0))
        throw std::domain_error("n_pop must be non-negative");
    if (s.t < 0) throw std::domain_error("period index must be non-negative");
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Starvation: return "Starvation";
        case Regime::Malthusian: return "Malthusian";
        case Regime::NonMalthusian: return "NonMalthusian";
    }
    return "?";
}

double agricultural_output(double z, double x, double a_a, double l_a,
                           const Parameters& p) {
    if (!finite_nonneg(z) || !finite_nonneg(x) || !finite_nonneg(a_a) || !finite_nonneg(l_a))
        throw std::domain_error("agricultural_output: inputs must be finite and non-negative");
    return std::pow(z, p.theta_z) * std::pow(x, p.theta_x) * std::pow(a_a * l_a, p.theta_l);
}

double subsistence_pressure(const EconomyState& s, const Parameters& p) {
    validate_state(s);
    return p.c_bar_a / std::pow(p.mu, p.theta_x) * std::pow(s.n_pop / s.z_land, p.theta_z) /
           (std::pow(s.a_m, p.theta_x) * std::pow(s.a_a, p.theta_l));
}

double required_farm_labor(const EconomyState& s, const Parameters& p) {
    const double k = subsistence_pressure(s, p);
    return std::pow(k, 1.0 / (1.0 - p.theta_z)) * s.n_pop;
}

double agricultural_price(double l_a, const EconomyState& s, const Parameters& p) {
    validate_state(s);
    if (!(std::isfinite(l_a) && l_a > 0.0))
        throw std::domain_error("agricultural_price: l_a must be positive");
    return std::pow(p.mu, 1.0 - p.theta_x) / p.theta_x * std::pow(s.a_m, 1.0 - p.theta_x) *
           std::pow(l_a / s.z_land, p.theta_z) / std::pow(s.a_a, p.theta_l);
}

double household_income(double p_a, double l_a, const EconomyState& s,
                        const Parameters& p) {
    if (!(std::isfinite(p_a) && p_a >= 0.0))
        throw std::domain_error("household_income: p_a must be non-negative");
    if (!(s.n_pop > 0.0)) throw std::domain_error("household_income: n_pop must be positive");
    const double x = p.mu * s.a_m * l_a;
    const double y_a = agricultural_output(s.z_land, x, s.a_a, l_a, p);
    return s.a_m + p.theta_z * p_a * y_a / s.n_pop;
}

HouseholdDemand household_demand(double y, double p_a, double w, const Parameters& p) {
    if (!(std::isfinite(y) && y > 0.0) || !(std::isfinite(p_a) && p_a > 0.0) ||
        !(std::isfinite(w) && w > 0.0))
        throw std::domain_error("household_demand: y, p_a, w must be positive");

    HouseholdDemand d;
    const double food_bill = p_a * p.c_bar_a;
    if (y <= food_bill) {
        // Too poor to reach subsistence: everything goes to food.
        d.c_a = y / p_a;
        return d;
    }
    d.c_a = p.c_bar_a;
    const double surplus = y - food_bill;
    if (y <= food_bill + p.gamma / (1.0 - p.gamma) * p.c_bar_m) {
        // Children preferred to manufacturing consumption.
        d.n = surplus / (p.eta * w);
        return d;
    }
    d.c_m = (1.0 - p.gamma) * surplus - p.gamma * p.c_bar_m;
    d.n = p.gamma * (surplus + p.c_bar_m) / (p.eta * w);
    return d;
}

double household_utility(double c_a, double c_m, double n, const Parameters& p) {
    if (!(std::isfinite(c_a) && c_a > 0.0))
        throw std::domain_error("household_utility: c_a must be positive");
    if (!(std::isfinite(c_m) && c_m >= 0.0) || !(std::isfinite(n) && n >= 0.0))
        throw std::domain_error("household_utility: c_m, n must be non-negative");
    if (c_a < p.c_bar_a) return std::log(c_a);
    if (n == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(p.c_bar_a) + (1.0 - p.gamma) * std::log(c_m + p.c_bar_m) +
           p.gamma * std::log(n);
}

}  // namespace malthus
