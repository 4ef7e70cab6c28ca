#pragma once

#include "bmsord/channel.hpp"
#include "bmsord/numerics.hpp"

namespace bmsord {

/// Per-capacity parameter bundle for the extremal Lambda curves of the
/// family of BMS channels with capacity exactly c.
///   eps_bsc : crossover probability of the BSC of capacity c
///   z_bsc   : abscissa where the lower envelope switches from the BSC
///             constant 2*eps_bsc to the optimized two-mass branch
struct ExtremalProfile {
    double c;
    double eps_bsc;
    double z_bsc;

    double x_bsc() const { return 1.0 - 2.0 * eps_bsc; }
};

/// Solves 1 - h2(eps) = c for eps in (0, 0.5).
double epsilon_bsc(double c, const SolverConfig& cfg = {});

/// Builds the profile for capacity c (one root solve; pure thereafter).
ExtremalProfile extremal_profile(double c, const SolverConfig& cfg = {});

/// Pointwise maximum of Lambda over the capacity-c family:
///   (1-c)(1-z)/h(z) on [0, 1-2*eps_bsc), and 1-z beyond.
double lambda_bar(const ExtremalProfile& p, double z);

/// Lambda function of the least degraded channel (the concave envelope of
/// lambda_bar): linear from 1-c at z=0 down to the BSC corner, then 1-z.
double lambda_star(const ExtremalProfile& p, double z);

/// The least degraded channel itself: mass (1-c-2e)/(1-2e) at 0 and
/// c/(1-2e) at 1-2e, where e = eps_bsc(c).
DiscreteChannel least_degraded_channel(double c, const SolverConfig& cfg = {});

/// Capacity of the least degraded channel: c^2 / (1 - 2*eps_bsc).
double capacity_star(double c, const SolverConfig& cfg = {});

/// Closed-form inverse of the lower-envelope fixed point:
///   z(x) = (log2(1-x) + log2(1+x)) / (log2(1-x) - log2(1+x)),
/// strictly increasing on (0,1).
double z_of_x(double x);

/// The unique x in (0,1) with z_of_x(x) = z. Solved by bisection on the
/// monotone inverse, parameterized by u = -ln(1-x) so that the solve stays
/// well conditioned as x approaches 1 (z approaches 1 only logarithmically
/// in 1-x).
double x_of_z(double z, const SolverConfig& cfg = {});

/// Optimal mass at position 0 for the two-mass branch of the lower
/// envelope: gamma(z) = (1-c-h(x(z))) / (1-h(x(z))), defined on [z_bsc, 1).
double gamma_of_z(const ExtremalProfile& p, double z, const SolverConfig& cfg = {});

/// Pointwise minimum of Lambda over the capacity-c family:
///   2*eps_bsc on [0, z_bsc), the optimized two-mass value on [z_bsc, 1),
///   and 0 at z = 1.
double lambda_under(const ExtremalProfile& p, double z, const SolverConfig& cfg = {});

/// Independent oracle for the two-mass branch: minimizes
/// gamma*(1-z) + (1-gamma)*(1-x) over a grid of grid_n positions x in
/// [max(z, 1-2*eps_bsc), 1), with gamma eliminated through the entropy
/// constraint and infeasible grid points skipped.
double lambda_opt_bruteforce(double c, double z, long grid_n,
                             const SolverConfig& cfg = {});

/// Capacity of the least upgraded channel, computed numerically:
///   1 - integral of lambda_under(z) / (ln2*(1-z^2)) over [0,1],
/// split at z_bsc (closed form on the constant piece, open quadrature on
/// the smooth piece; the integrand is finite from the left at z = 1).
double capacity_under(double c, const SolverConfig& cfg = {});

/// One row of the capacity-gap table.
struct CapacityGapRow {
    double c;
    double c_star;   // capacity of the least degraded channel
    double c_under;  // capacity of the least upgraded channel
    double d_gap;    // c - c_star
    double u_gap;    // c_under - c
};

CapacityGapRow gap_row(double c, const SolverConfig& cfg = {});

}  // namespace bmsord
