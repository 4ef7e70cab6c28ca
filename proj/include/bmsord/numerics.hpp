#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "bmsord/errors.hpp"

namespace bmsord {

/// Tolerances and iteration caps shared by the root finder and the
/// quadrature routine. All quantities handled by this library live in
/// [0,1], so the tolerances are absolute.
struct SolverConfig {
    double root_tol = 1e-12;   // width of the final bisection bracket
    double quad_tol = 1e-10;   // |I_2n - I_n| stopping threshold
    int max_iter = 200;        // bisection iteration cap
    int max_panels = 1 << 16;  // quadrature panel cap

    void validate() const {
        if (!(root_tol > 0.0) || !(quad_tol > 0.0))
            throw InvalidParameter("SolverConfig: tolerances must be positive");
        if (max_iter <= 0 || max_panels <= 0)
            throw InvalidParameter("SolverConfig: iteration caps must be positive");
    }
};

namespace detail {

// 32-point Gauss-Legendre rule on [-1,1], positive half (nodes are symmetric).
inline constexpr std::array<double, 16> kGaussNodes = {
    0.04830766568773831,   0.14447196158279649, 0.23928736225213706,
    0.33186860228212767,   0.42135127613063533, 0.50689990893222936,
    0.5877157572407623,    0.66304426693021523, 0.73218211874028971,
    0.79448379596794239,   0.84936761373256997, 0.8963211557660522,
    0.93490607593773967,   0.96476225558750639, 0.98561151154526838,
    0.99726386184948157,
};
inline constexpr std::array<double, 16> kGaussWeights = {
    0.096540088514727812,  0.095638720079274833, 0.093844399080804566,
    0.091173878695763863,  0.087652093004403908, 0.083311924226946846,
    0.078193895787070311,  0.072345794108848449, 0.065822222776361752,
    0.058684093478535704,  0.050998059262376244, 0.042835898022226426,
    0.034273862913021626,  0.025392065309262427, 0.016274394730905965,
    0.0070186100094692984,
};

// One 32-point panel over [lo, lo+h]; endpoints are never evaluated.
template <class F>
double gauss_panel(F&& f, double lo, double h, bool& finite) {
    const double mid = lo + 0.5 * h;
    const double half = 0.5 * h;
    double acc = 0.0;
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
        const double dx = half * kGaussNodes[i];
        const double fa = f(mid - dx);
        const double fb = f(mid + dx);
        if (!std::isfinite(fa) || !std::isfinite(fb)) {
            finite = false;
            return 0.0;
        }
        acc += kGaussWeights[i] * (fa + fb);
    }
    return half * acc;
}

}  // namespace detail

/// Finds the root of a continuous strictly monotone f on [lo, hi] by
/// bisection. Stops once the bracket width drops below cfg.root_tol or the
/// midpoint can no longer be distinguished from the endpoints (the bracket
/// has collapsed to adjacent doubles). Deterministic for identical inputs.
///
/// Throws NoBracket when f(lo) and f(hi) have the same strict sign, and
/// NoConvergence when cfg.max_iter halvings were not enough.
template <class F>
double bisect(F&& f, double lo, double hi, const SolverConfig& cfg = {}) {
    cfg.validate();
    if (!(lo < hi)) throw NoBracket("bisect: lo must be less than hi");

    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoBracket("bisect: f(lo) and f(hi) have the same sign");

    for (int it = 0; it < cfg.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= cfg.root_tol) return 0.5 * (lo + hi);
    }
    throw NoConvergence("bisect: iteration cap reached before bracket width " +
                        std::to_string(cfg.root_tol));
}

/// Integrates f over (a, b) with composite 32-point Gauss-Legendre panels,
/// doubling the panel count until two successive estimates agree to
/// cfg.quad_tol. Endpoints are never evaluated, so integrands that are
/// merely indeterminate (0/0) at a or b are fine.
///
/// Throws NonFinite if an interior node evaluates to NaN/inf and
/// NoConvergence if cfg.max_panels is exceeded.
template <class F>
double integrate_open(F&& f, double a, double b, const SolverConfig& cfg = {}) {
    cfg.validate();
    if (!(a < b)) throw InvalidParameter("integrate_open: requires a < b");

    double prev = 0.0;
    bool have_prev = false;
    for (int panels = 1; panels <= cfg.max_panels; panels *= 2) {
        const double h = (b - a) / panels;
        double total = 0.0;
        bool finite = true;
        for (int k = 0; k < panels; ++k) {
            total += detail::gauss_panel(f, a + k * h, h, finite);
            if (!finite)
                throw NonFinite("integrate_open: non-finite integrand value");
        }
        if (have_prev && std::abs(total - prev) < cfg.quad_tol) return total;
        prev = total;
        have_prev = true;
    }
    throw NoConvergence("integrate_open: panel cap reached without convergence");
}

}  // namespace bmsord
