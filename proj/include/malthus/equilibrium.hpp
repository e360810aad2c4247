#pragma once

#include "malthus/model.hpp"

// Static equilibrium of a single period (regime selection + all quantities)
// and the laws of motion that connect periods.

namespace malthus {

struct RootFindConfig {
    double abs_tol = 1e-12;
    int max_iter = 200;
};

/// Residual of the fertility fixed-point equation
///   n = (1/eta) * [1 - k * (1 - eta n)^theta_z]
/// evaluated at n. Positive at n = 0 for k < 1, negative just below 1/eta.
double fertility_residual(double n, double k, const Parameters& p);

/// Unique fertility root in [0, 1/eta) for subsistence pressure k in (0, 1),
/// found by bisection. The degenerate root at n = 1/eta (zero labor supply)
/// is excluded by shrinking the upper bracket end by a relative 1e-12.
/// Throws StarvationSignal for k >= 1 and std::domain_error for k <= 0.
double malthusian_fertility_root(double k, const Parameters& p,
                                 const RootFindConfig& cfg = {});

/// Solves the complete static equilibrium of one period. Regimes are tried
/// in order starvation -> non-Malthusian -> Malthusian so that each branch's
/// preconditions are guaranteed by the prior rejections.
PeriodOutcome solve_period(const EconomyState& s, const Parameters& p,
                           const RootFindConfig& cfg = {});

/// Advances productivity and population one period. Manufacturing
/// productivity grows only when the period employed full-time manufacturing
/// workers. Land is untouched (shocks are applied by the scenario layer).
EconomyState advance(const EconomyState& s, const PeriodOutcome& o, const Parameters& p);

/// One step of the detrended population map: returns (n / n_ss) * n_tilde
/// where n solves the fertility equation at detrended population n_tilde.
/// Time-invariant by construction while manufacturing productivity is fixed.
double malthus_map(double n_tilde, double a_m, double a_a0, double z,
                   const Parameters& p, const RootFindConfig& cfg = {});

}  // namespace malthus
