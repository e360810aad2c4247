#include "malthus/equilibrium.hpp"

#include <cmath>
#include <string>

namespace malthus {

namespace {

// Relative shrink applied to the upper bracket end; keeps the bisection away
// from the degenerate root at n = 1/eta where labor supply vanishes.
constexpr double kBracketShrink = 1e-12;

double rel_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

// Invariant checks on a finished outcome. Violations mean a bug in the
// regime logic, not bad user input.
void check_outcome(const PeriodOutcome& o, const EconomyState& s, const Parameters& p) {
    const double labor_supply = (1.0 - p.eta * o.n_fert) * s.n_pop;
    if (rel_gap(o.l_a + o.l_m, labor_supply) > 1e-9)
        throw SolverError("labor market failed to clear");
    if (rel_gap(o.c_m * s.n_pop + o.x_int, o.y_man) > 1e-9)
        throw SolverError("manufacturing market failed to clear");
    switch (o.regime) {
        case Regime::Starvation:
            // c_a == c_bar_a can occur at the exact K = 1 boundary.
            if (o.n_fert != 0.0 || o.c_a > p.c_bar_a * (1.0 + 1e-12))
                throw SolverError("inconsistent starvation outcome");
            break;
        case Regime::Malthusian:
            if (o.l_m != 0.0 || o.c_m != 0.0)
                throw SolverError("inconsistent Malthusian outcome");
            break;
        case Regime::NonMalthusian:
            if (!(o.l_m > 0.0) || !(o.c_m > 0.0))
                throw SolverError("inconsistent non-Malthusian outcome");
            break;
    }
}

}  // namespace

double fertility_residual(double n, double k, const Parameters& p) {
    return (1.0 - k * std::pow(1.0 - p.eta * n, p.theta_z)) / p.eta - n;
}

double malthusian_fertility_root(double k, const Parameters& p, const RootFindConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || cfg.max_iter < 1)
        throw std::domain_error("root finder needs abs_tol > 0 and max_iter >= 1");
    if (!(std::isfinite(k)) || k <= 0.0)
        throw std::domain_error("fertility root: pressure must be positive");
    if (k >= 1.0)
        throw StarvationSignal("subsistence pressure " + std::to_string(k) +
                               " leaves no income for children");

    double lo = 0.0;
    double hi = (1.0 - kBracketShrink) / p.eta;
    double f_lo = fertility_residual(lo, k, p);
    double f_hi = fertility_residual(hi, k, p);
    if (!(f_lo > 0.0) || !(f_hi < 0.0))
        throw SolverError("fertility root: bracket does not straddle a root");

    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < cfg.max_iter && (hi - lo) > cfg.abs_tol; ++i) {
        mid = 0.5 * (lo + hi);
        const double f_mid = fertility_residual(mid, k, p);
        if (f_mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    mid = 0.5 * (lo + hi);
    if (std::abs(fertility_residual(mid, k, p)) >= cfg.abs_tol)
        throw SolverError("fertility root: bisection did not converge");
    return mid;
}

PeriodOutcome solve_period(const EconomyState& s, const Parameters& p,
                           const RootFindConfig& cfg) {
    validate_state(s);
    if (!(s.n_pop > 0.0)) throw std::domain_error("solve_period: population must be positive");

    PeriodOutcome o;
    o.wage = s.a_m;

    const double k = subsistence_pressure(s, p);
    if (k >= 1.0) {
        // Not enough output to feed everyone even with all labor farming.
        // Households spend their whole income on food and raise no children.
        o.regime = Regime::Starvation;
        o.n_fert = 0.0;
        o.l_a = s.n_pop;
        o.l_m = 0.0;
        o.x_int = p.mu * s.a_m * o.l_a;
        o.y_agr = agricultural_output(s.z_land, o.x_int, s.a_a, o.l_a, p);
        o.y_man = p.mu * s.a_m * o.l_a;
        o.p_a = agricultural_price(o.l_a, s, p);
        o.income = household_income(o.p_a, o.l_a, s, p);
        o.rent_pc = o.income - o.wage;
        o.c_a = o.y_agr / s.n_pop;
        o.c_m = 0.0;
        o.ell_a_emp = 1.0;
        o.ell_a_pc = 1.0;
        check_outcome(o, s, p);
        return o;
    }

    // Farm labor is pinned by subsistence demand in both remaining regimes,
    // so price and income are known before fertility.
    const double l_a_req = required_farm_labor(s, p);
    const double p_a = agricultural_price(l_a_req, s, p);
    const double y = household_income(p_a, l_a_req, s, p);
    const double food_bill = p_a * p.c_bar_a;

    if (y > food_bill + p.gamma / (1.0 - p.gamma) * p.c_bar_m) {
        // Income high enough for manufacturing consumption; the surplus labor
        // moves into full-time manufacturing work.
        const HouseholdDemand d = household_demand(y, p_a, o.wage, p);
        if (!(d.c_m > 0.0)) throw SolverError("non-Malthusian branch produced c_m <= 0");
        o.regime = Regime::NonMalthusian;
        o.n_fert = d.n;
        o.c_a = d.c_a;
        o.c_m = d.c_m;
        o.l_a = l_a_req;
        o.l_m = d.c_m * s.n_pop / s.a_m;
        o.p_a = p_a;
        o.income = y;
    } else {
        // Malthusian: all labor farms, fertility absorbs the surplus.
        o.regime = Regime::Malthusian;
        o.n_fert = malthusian_fertility_root(k, p, cfg);
        o.l_a = (1.0 - p.eta * o.n_fert) * s.n_pop;
        o.l_m = 0.0;
        o.p_a = agricultural_price(o.l_a, s, p);
        o.income = household_income(o.p_a, o.l_a, s, p);
        o.c_a = p.c_bar_a;
        o.c_m = 0.0;
    }

    o.rent_pc = o.income - o.wage;
    o.x_int = p.mu * s.a_m * o.l_a;
    o.y_agr = agricultural_output(s.z_land, o.x_int, s.a_a, o.l_a, p);
    o.y_man = s.a_m * o.l_m + p.mu * s.a_m * o.l_a;
    const double labor_supply = (1.0 - p.eta * o.n_fert) * s.n_pop;
    o.ell_a_emp = o.l_a / labor_supply;
    o.ell_a_pc = o.l_a / s.n_pop;
    check_outcome(o, s, p);
    return o;
}

EconomyState advance(const EconomyState& s, const PeriodOutcome& o, const Parameters& p) {
    EconomyState next = s;
    next.a_a = p.g_a * s.a_a;
    next.a_m = o.l_m > 0.0 ? p.g_m * s.a_m : s.a_m;
    next.n_pop = o.n_fert * s.n_pop;
    next.t = s.t + 1;
    return next;
}

double malthus_map(double n_tilde, double a_m, double a_a0, double z,
                   const Parameters& p, const RootFindConfig& cfg) {
    EconomyState s;
    s.a_a = a_a0;
    s.a_m = a_m;
    s.n_pop = n_tilde;
    s.z_land = z;
    const double k = subsistence_pressure(s, p);
    const double n = malthusian_fertility_root(k, p, cfg);
    const double n_ss = std::pow(p.g_a, p.theta_l / p.theta_z);
    return n / n_ss * n_tilde;
}

}  // namespace malthus
