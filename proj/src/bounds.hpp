#pragma once

#include "rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace credal {

/// log10 of the generalized binomial coefficient Gamma(a+1) /
/// (Gamma(b+1) Gamma(a-b+1)), for real a >= b >= 0. Exact integer
/// arithmetic is used when both arguments are integral and small enough to
/// expand; log-Gamma otherwise.
double log10_binomial(double a, double b);

/// Upper bound on log10 of the partition size needed to coarsen a loss
/// matrix with d_count rows to relative precision eps:
/// d_count * log10(1 + 1/eps).
double partition_size_bound(double eps, unsigned d_count);

/// Upper bound on log10 of the credal set size needed to cover all charges
/// on n_cells cells to L1 precision delta: log10 C(n(1+1/delta), n-1).
double credal_size_bound(std::uint64_t n_cells, double delta);

/// Exact error bounds on |E_P(f) - E_Q(g)| when f and g are gamble_close at
/// eps and P and Q are charge_close at delta: the pair
/// (range * (eps + delta(1+2eps)), coarse_range * (eps/(1-2eps) + delta)).
/// Requires 0 < eps < 1/2.
std::pair<Rational, Rational> expectation_error_bounds(const Rational& range,
                                                       const Rational& coarse_range,
                                                       const Rational& eps,
                                                       const Rational& delta);

/// Tolerance levels at which choice sets transfer between a problem and its
/// discretization: a gamma-level set on one side is contained in the
/// inflated-level set on the other.
struct InflatedLevels {
    Rational forward;  ///< ground level gamma -> coarse level
    Rational backward; ///< coarse level gamma -> ground level
};

/// forward  = gamma/(1-2eps) + 2(eps/(1-2eps) + delta)
/// backward = gamma(1+2eps) + 2(eps + delta(1+2eps))
/// Requires gamma >= 0, 0 < eps < 1/2, delta >= 0.
InflatedLevels inflate_levels(const Rational& gamma, const Rational& eps, const Rational& delta);

/// Credal size bound along the fixed-budget curve eps + delta = gamma_star:
/// for each grid eps returns (eps, log10 C(1/(eps^d * delta), 1/eps^d)) with
/// delta = gamma_star - eps. Every grid point must lie in (0, gamma_star).
std::vector<std::pair<double, double>> gamma_curve(double gamma_star, unsigned d_count,
                                                   const std::vector<double>& eps_grid);

} // namespace credal
