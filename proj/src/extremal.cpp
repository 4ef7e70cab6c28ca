#include "bmsord/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bmsord {

namespace {

const double kLn2 = std::log(2.0);

// z as a function of u = -ln(1-x). Since ln(1+x) = ln(2 - e^-u), the
// closed-form inverse becomes z = (u - v)/(u + v) with v = ln(1 + x),
// which stays accurate for x arbitrarily close to both ends.
double z_of_u(double u) {
    const double v = std::log1p(-std::expm1(-u));
    return (u - v) / (u + v);
}

double u_of_z(double z, const SolverConfig& cfg) {
    // The root satisfies u = ln(1+x)*(1+z)/(1-z) <= ln2*(1+z)/(1-z).
    const double hi = kLn2 * (1.0 + z) / (1.0 - z) + 1.0;
    return bisect([z](double u) { return z_of_u(u) - z; }, 1e-300, hi, cfg);
}

// (1-x, h(x)) at the two-mass optimum for a given z, via u = -ln(1-x).
struct OptPoint {
    double one_minus_x;
    double h;
};

OptPoint opt_point(double z, const SolverConfig& cfg) {
    const double u = u_of_z(z, cfg);
    const double one_minus_x = std::exp(-u);
    return {one_minus_x, binary_entropy(0.5 * one_minus_x)};
}

// One-time sanity check that the closed-form inverse is increasing, on a
// 10^4-point grid. The solver relies on this monotonicity.
void assert_z_of_x_monotone() {
    static const bool ok = [] {
        const int n = 10000;
        double prev = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double x = static_cast<double>(k) / (n + 1);
            const double zx = z_of_x(x);
            if (!(zx > prev))
                throw std::logic_error(
                    "z_of_x is not strictly increasing at x = " + std::to_string(x));
            prev = zx;
        }
        return true;
    }();
    (void)ok;
}

}  // namespace

double epsilon_bsc(double c, const SolverConfig& cfg) {
    if (!(c > 0.0 && c < 1.0))
        throw InvalidParameter("epsilon_bsc: capacity must be in (0,1)");
    // Solve to near machine precision in the abscissa so the entropy
    // residual |h2(eps) - (1-c)| lands below 1e-12 as well.
    SolverConfig tight = cfg;
    tight.root_tol = std::min(cfg.root_tol, 1e-14);
    const double target = 1.0 - c;
    return bisect([target](double e) { return binary_entropy(e) - target; },
                  1e-15, 0.5, tight);
}

ExtremalProfile extremal_profile(double c, const SolverConfig& cfg) {
    assert_z_of_x_monotone();
    const double eps = epsilon_bsc(c, cfg);
    const double ebar = 1.0 - eps;
    const double zb = std::log2(4.0 * eps * ebar) / std::log2(eps / ebar);
    ExtremalProfile p{c, eps, zb};
    if (!(zb > 0.0 && zb < p.x_bsc()))
        throw InvalidParameter("extremal_profile: z_bsc outside (0, 1-2eps) for c = " +
                               std::to_string(c));
    return p;
}

double lambda_bar(const ExtremalProfile& p, double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("lambda_bar: z outside [0,1]");
    if (z < p.x_bsc())
        return (1.0 - p.c) * (1.0 - z) / kernel_h(z);
    return 1.0 - z;
}

double lambda_star(const ExtremalProfile& p, double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("lambda_star: z outside [0,1]");
    if (z < p.x_bsc())
        return 1.0 - p.c - z * (1.0 - p.c - 2.0 * p.eps_bsc) / p.x_bsc();
    return 1.0 - z;
}

DiscreteChannel least_degraded_channel(double c, const SolverConfig& cfg) {
    const double eps = epsilon_bsc(c, cfg);
    const double x_bsc = 1.0 - 2.0 * eps;
    return new_channel({{(1.0 - c - 2.0 * eps) / x_bsc, 0.0}, {c / x_bsc, x_bsc}});
}

double capacity_star(double c, const SolverConfig& cfg) {
    const double eps = epsilon_bsc(c, cfg);
    return c * c / (1.0 - 2.0 * eps);
}

double z_of_x(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw DomainError("z_of_x: argument must be strictly inside (0,1)");
    const double lm = std::log2(1.0 - x);
    const double lp = std::log2(1.0 + x);
    return (lm + lp) / (lm - lp);
}

double x_of_z(double z, const SolverConfig& cfg) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("x_of_z: argument must be strictly inside (0,1)");
    return -std::expm1(-u_of_z(z, cfg));
}

double gamma_of_z(const ExtremalProfile& p, double z, const SolverConfig& cfg) {
    if (!(z >= p.z_bsc && z < 1.0))
        throw DomainError("gamma_of_z: z outside [z_bsc, 1)");
    const OptPoint pt = opt_point(z, cfg);
    return (1.0 - p.c - pt.h) / (1.0 - pt.h);
}

double lambda_under(const ExtremalProfile& p, double z, const SolverConfig& cfg) {
    if (!(z >= 0.0 && z <= 1.0))
        throw DomainError("lambda_under: z outside [0,1]");
    if (z >= 1.0) return 0.0;
    if (z < p.z_bsc) return 2.0 * p.eps_bsc;
    const OptPoint pt = opt_point(z, cfg);
    const double gamma = (1.0 - p.c - pt.h) / (1.0 - pt.h);
    return gamma * (1.0 - z) + (p.c / (1.0 - pt.h)) * pt.one_minus_x;
}

double lambda_opt_bruteforce(double c, double z, long grid_n,
                             const SolverConfig& cfg) {
    if (grid_n < 1000)
        throw InvalidParameter("lambda_opt_bruteforce: grid_n must be >= 1000");
    const ExtremalProfile p = extremal_profile(c, cfg);
    if (!(z >= p.z_bsc && z < 1.0))
        throw DomainError("lambda_opt_bruteforce: z outside [z_bsc, 1)");

    const double lo = std::max(z, p.x_bsc());
    double best = 0.0;
    bool found = false;
    for (long k = 0; k < grid_n; ++k) {
        const double x = lo + (1.0 - lo) * static_cast<double>(k) / grid_n;
        const double h = kernel_h(x);
        if (1.0 - h < 1e-15) continue;
        const double gamma = (1.0 - c - h) / (1.0 - h);
        if (gamma < 0.0 || gamma > 1.0) continue;
        const double value = gamma * (1.0 - z) + (1.0 - gamma) * (1.0 - x);
        if (!found || value < best) {
            best = value;
            found = true;
        }
    }
    if (!found)
        throw Infeasible("lambda_opt_bruteforce: no feasible grid point");
    return best;
}

double capacity_under(double c, const SolverConfig& cfg) {
    const ExtremalProfile p = extremal_profile(c, cfg);
    // Constant piece in closed form; the quadrature must not straddle the
    // kink at z_bsc.
    const double head = 2.0 * p.eps_bsc * std::atanh(p.z_bsc) / kLn2;
    const double tail = integrate_open(
        [&](double z) {
            return lambda_under(p, z, cfg) / (kLn2 * (1.0 - z) * (1.0 + z));
        },
        p.z_bsc, 1.0, cfg);
    return 1.0 - (head + tail);
}

CapacityGapRow gap_row(double c, const SolverConfig& cfg) {
    const double cs = capacity_star(c, cfg);
    const double cu = capacity_under(c, cfg);
    return {c, cs, cu, c - cs, cu - c};
}

}  // namespace bmsord
