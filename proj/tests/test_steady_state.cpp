#include <doctest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "malthus/equilibrium.hpp"
#include "malthus/scenario.hpp"
#include "malthus/steady_state.hpp"
#include "oracles.hpp"

using namespace malthus;

namespace {

const Calibrated cal = testonly::baseline();
const Parameters& P = cal.params;

Parameters with(double c_bar_m) {
    CalibrationInput c;
    c.c_bar_m = c_bar_m;
    return build_parameters(c).params;
}

// Independent locator for the escape pair: walk fertility over a fine grid,
// map each candidate through the income-threshold locus to a population, and
// find where the fertility fixed-point residual at that population crosses
// zero.
double joint_escape_fertility(const Parameters& p, double a_m) {
    auto pop_at = [&](double n) {
        const double bracket = (1.0 - p.theta_z * p.eta * n) -
                               p.theta_x / p.mu * p.gamma / (1.0 - p.gamma) * p.c_bar_m / a_m;
        return std::pow(bracket * std::pow(p.mu, p.theta_x) / p.c_bar_a *
                            std::pow(a_m, p.theta_x) / std::pow(1.0 - p.eta * n, p.theta_z),
                        1.0 / p.theta_z);
    };
    auto res = [&](double n) {
        EconomyState s{1.0, a_m, pop_at(n), 1.0, 0};
        return fertility_residual(n, subsistence_pressure(s, p), p);
    };
    double lo = 0.0, hi = 0.999 / p.eta;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (res(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("steady-state growth factor") {
    CHECK(malthus_growth(P) == doctest::Approx(frozen::n_ss).epsilon(1e-13));
    CHECK(std::pow(malthus_growth(P), 1.0 / P.years_per_period) - 1.0 ==
          doctest::Approx(0.0035).epsilon(1e-12));

    Parameters flat = P;
    flat.g_a = 1.0;
    CHECK(malthus_growth(flat) == 1.0);

    // equal labor and land shares make the exponent one
    CalibrationInput c;
    c.theta_z = 0.2;
    c.theta_x = 0.6;
    const Parameters sym = build_parameters(c).params;
    CHECK(malthus_growth(sym) == doctest::Approx(sym.g_a).epsilon(1e-15));
}

TEST_CASE("steady-state population level") {
    const double pop = malthus_ss_population(P, 1.0, 1.0, 1.0);
    CHECK(pop == doctest::Approx(frozen::pop_ss).epsilon(1e-12));

    // the dynamic map settles on the same level
    double n_tilde = 0.8 * pop;
    for (int i = 0; i < 400; ++i) n_tilde = malthus_map(n_tilde, 1.0, 1.0, 1.0, P);
    CHECK(n_tilde == doctest::Approx(pop).epsilon(1e-9));

    CHECK(malthus_ss_population(P, 1.0, 1.0, 3.1) == doctest::Approx(3.1 * pop).epsilon(1e-12));
    CHECK(malthus_ss_population(P, 1.0, 2.0, 1.0) / pop ==
          doctest::Approx(frozen::pow2_tl_over_tz).epsilon(1e-12));

    Parameters infeasible = P;
    infeasible.eta = 0.95;  // eta * n_ss > 1
    CHECK_THROWS_AS(malthus_ss_population(infeasible, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("escape threshold: closed form, joint system, limits") {
    const auto [n_esc, pop_esc] = escape_threshold(P, 1.0, 1.0, 1.0);
    CHECK(n_esc == doctest::Approx(frozen::n_escape).epsilon(1e-13));
    CHECK(pop_esc == doctest::Approx(frozen::pop_escape).epsilon(1e-12));

    // agreement with the independent joint-system locator
    CHECK(std::abs(joint_escape_fertility(P, 1.0) - n_esc) < 1e-9);

    // the threshold scales linearly with land
    CHECK(escape_threshold(P, 1.0, 1.0, 2.74).second ==
          doctest::Approx(2.74 * pop_esc).epsilon(1e-12));

    // vanishing taste shifter: no children at the boundary, threshold merges
    // with the starvation population
    const Parameters tiny = with(1e-12);
    const auto [n0, pop0] = escape_threshold(tiny, 1.0, 1.0, 1.0);
    CHECK(n0 < 1e-11);
    CHECK(pop0 == doctest::Approx(starvation_population(tiny, 1.0, 1.0, 1.0)).epsilon(1e-9));

    // taste shifter too strong relative to wages: no growth regime at all
    CHECK_THROWS_AS(escape_threshold(with(4.1), 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("starvation population") {
    const double pop = starvation_population(P, 1.0, 1.0, 1.0);
    CHECK(pop == doctest::Approx(frozen::pop_starve).epsilon(1e-12));
    CHECK(pop / frozen::pop_ss == doctest::Approx(frozen::starve_ratio).epsilon(1e-12));

    // identity with the steady-state level
    const double via_ss = frozen::pop_ss *
                          std::pow(1.0 - frozen::eta_n_ss,
                                   -(1.0 - P.theta_z) / P.theta_z);
    CHECK(pop == doctest::Approx(via_ss).epsilon(1e-11));

    // no childcare time: the two thresholds coincide
    Parameters quick = P;
    quick.eta = 1e-9;
    CHECK(starvation_population(quick, 1.0, 1.0, 1.0) ==
          doctest::Approx(malthus_ss_population(quick, 1.0, 1.0, 1.0)).epsilon(1e-6));

    // the solver starves just above the boundary
    EconomyState s = cal.initial;
    s.n_pop = 1.001 * pop;
    CHECK(solve_period(s, P).regime == Regime::Starvation);
    s.n_pop = 0.999 * pop;
    CHECK(solve_period(s, P).regime == Regime::Malthusian);
}

TEST_CASE("regime ratio and existence boundary") {
    const RegimeRatio r = regime_ratio(P, 1.0);
    CHECK(r.escape_ratio == doctest::Approx(frozen::escape_ratio).epsilon(1e-12));
    CHECK(r.malthus_exists);

    CHECK(regime_ratio(with(frozen::c_bar_m_boundary), 1.0).escape_ratio ==
          doctest::Approx(1.0).epsilon(1e-9));

    const RegimeRatio low = regime_ratio(with(0.5), 1.0);
    CHECK(low.escape_ratio > 1.0);
    CHECK_FALSE(low.malthus_exists);
}

TEST_CASE("sustainability bound") {
    CHECK(sustainability_bound(P) == doctest::Approx(frozen::sustainability).epsilon(1e-12));

    Parameters frozen_growth = P;
    frozen_growth.g_a = 1.0;
    frozen_growth.g_m = 1.0;
    CHECK(sustainability_bound(frozen_growth) == 1.0);

    // while fertility stays below the bound, the per-adult farm share falls
    ShockSchedule divergence;
    divergence.events.push_back({10, 2.74, 1.0});
    const Trajectory traj = simulate(cal.initial, divergence, 26, P);
    const double bound = sustainability_bound(P);
    for (std::size_t t = 10; t + 1 < traj.rows.size(); ++t) {
        REQUIRE(traj.rows[t].outcome.regime == Regime::NonMalthusian);
        if (traj.rows[t].outcome.n_fert < bound)
            CHECK(traj.rows[t + 1].outcome.ell_a_pc < traj.rows[t].outcome.ell_a_pc);
    }
}

TEST_CASE("steady-state comparison across economies") {
    const SteadyStateComparison same = compare_steady_states(P, 1.0, 1.0, 1.0, 1.0, 1.0);
    CHECK(same.labor_productivity_b == same.labor_productivity_c);
    CHECK(same.land_productivity_b == same.land_productivity_c);
    CHECK(same.land_productivity_ratio == doctest::Approx(1.0).epsilon(1e-15));

    const SteadyStateComparison cmp = compare_steady_states(P, 1.0, 2.0, 1.0, 1.0, 1.0);
    CHECK(cmp.labor_productivity_b == cmp.labor_productivity_c);
    CHECK(cmp.land_productivity_ratio ==
          doctest::Approx(frozen::pow2_tl_over_tz).epsilon(1e-12));

    // simulated cross-check: both economies run at their own steady state
    for (const double a_a0 : {1.0, 2.0}) {
        EconomyState s{a_a0, 1.0, malthus_ss_population(P, 1.0, a_a0, 1.0), 1.0, 0};
        const Trajectory traj = simulate(s, {}, 5, P);
        for (const TrajectoryRow& row : traj.rows) {
            CHECK(row.outcome.regime == Regime::Malthusian);
            CHECK(row.outcome.y_agr / row.outcome.l_a ==
                  doctest::Approx(cmp.labor_productivity_b).epsilon(1e-9));
        }
    }
}

TEST_CASE("report assembles the full picture") {
    const SteadyStateReport r = steady_state_report(P, 1.0, 1.0, 1.0);
    CHECK(r.n_ss == doctest::Approx(frozen::n_ss).epsilon(1e-13));
    CHECK(r.n_tilde_ss == doctest::Approx(frozen::pop_ss).epsilon(1e-12));
    CHECK(r.n_escape == doctest::Approx(frozen::n_escape).epsilon(1e-13));
    CHECK(r.n_tilde_escape == doctest::Approx(frozen::pop_escape).epsilon(1e-12));
    CHECK(r.n_tilde_starve == doctest::Approx(frozen::pop_starve).epsilon(1e-12));
    CHECK(r.escape_ratio == doctest::Approx(frozen::escape_ratio).epsilon(1e-12));
    CHECK(r.escape_land_multiplier ==
          doctest::Approx(frozen::escape_multiplier).epsilon(1e-12));
    CHECK(r.escape_land_multiplier * r.escape_ratio == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.sustainability_bound == doctest::Approx(frozen::sustainability).epsilon(1e-12));
    CHECK(r.malthus_exists);
    CHECK(r.n_tilde_starve > r.n_tilde_ss);
    CHECK(r.n_tilde_ss > 0.0);
}

TEST_CASE("detrending holds along a simulated path") {
    const Trajectory traj = simulate(cal.initial, {}, 41, P);
    REQUIRE(traj.rows.size() == 41);
    for (std::size_t t = 0; t < traj.rows.size(); ++t) {
        const double detrended =
            traj.rows[t].state.n_pop / std::pow(frozen::n_ss, static_cast<double>(t));
        CHECK(detrended == doctest::Approx(frozen::pop_ss).epsilon(1e-9));
    }
}

TEST_CASE("map iteration converges from both sides") {
    const double target = frozen::pop_ss;
    for (const double start : {0.5 * target, 1.5 * target}) {
        double n_tilde = start;
        bool from_below = start < target;
        int iters = 0;
        while (std::abs(n_tilde - target) / target > 1e-6) {
            const double next = malthus_map(n_tilde, 1.0, 1.0, 1.0, P);
            if (from_below) {
                CHECK(next > n_tilde);
                CHECK(next < target * (1.0 + 1e-12));
            } else {
                CHECK(next < n_tilde);
                CHECK(next > target * (1.0 - 1e-12));
            }
            n_tilde = next;
            REQUIRE(++iters <= 200);
        }
    }
}
