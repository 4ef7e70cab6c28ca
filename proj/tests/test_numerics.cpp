#include <cmath>

#include "doctest.h"

#include "bmsord/channel.hpp"
#include "bmsord/numerics.hpp"
#include "bmsord/sampler.hpp"

using namespace bmsord;

namespace {

// Independent oracle: minimizer of |h2(eps) - target| on a 1e-7 grid.
double h2_inverse_scan(double target) {
    double best = 0.0;
    double best_err = 1e300;
    for (long k = 1; k < 5000000; ++k) {
        const double eps = static_cast<double>(k) * 1e-7;
        const double err = std::abs(binary_entropy(eps) - target);
        if (err < best_err) {
            best_err = err;
            best = eps;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("bisect finds simple roots") {
    CHECK(bisect([](double x) { return x - 0.5; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bisect([](double x) { return x * x - 2.0; }, 1.0, 2.0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // decreasing function, root at an endpoint
    CHECK(bisect([](double x) { return -x; }, 0.0, 1.0) == 0.0);
}

TEST_CASE("bisect inverts the binary entropy function") {
    const double scanned = h2_inverse_scan(0.5);
    const double solved =
        bisect([](double e) { return binary_entropy(e) - 0.5; }, 1e-9, 0.5);
    CHECK(std::abs(solved - scanned) < 1e-6);
    CHECK(scanned == doctest::Approx(0.110028).epsilon(1e-5));
}

TEST_CASE("bisect error paths") {
    CHECK_THROWS_AS(bisect([](double x) { return x + 1.0; }, 0.0, 1.0), NoBracket);
    CHECK_THROWS_AS(bisect([](double x) { return x; }, 1.0, 0.5), NoBracket);

    SolverConfig starved;
    starved.max_iter = 3;
    starved.root_tol = 1e-18;
    CHECK_THROWS_AS(bisect([](double x) { return x - 0.3; }, 0.0, 1.0, starved),
                    NoConvergence);

    SolverConfig bad;
    bad.root_tol = 0.0;
    CHECK_THROWS_AS(bisect([](double x) { return x; }, -1.0, 1.0, bad),
                    InvalidParameter);
}

TEST_CASE("bisect is monotone-safe") {
    SplitMix64 rng(101);
    SolverConfig coarse;
    coarse.root_tol = 1e-8;
    SolverConfig fine;
    fine.root_tol = 1e-9;
    for (int i = 0; i < 50; ++i) {
        const double r = 0.05 + 0.9 * rng.next_unit();
        const double k = 0.5 + 10.0 * rng.next_unit();
        auto f = [r, k](double x) { return std::atan(k * (x - r)); };
        const double root_coarse = bisect(f, 0.0, 1.0, coarse);
        const double root_fine = bisect(f, 0.0, 1.0, fine);
        CHECK(root_coarse >= 0.0);
        CHECK(root_coarse <= 1.0);
        CHECK(std::abs(root_coarse - r) <= coarse.root_tol);
        CHECK(std::abs(root_fine - root_coarse) <= coarse.root_tol);
    }
}

TEST_CASE("integrate_open basics") {
    CHECK(integrate_open([](double) { return 1.0; }, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // 0/0 at z=1 in this form; the open rule never evaluates the endpoint.
    const double ln2 = integrate_open(
        [](double z) { return (1.0 - z) / (1.0 - z * z); }, 0.0, 1.0);
    CHECK(std::abs(ln2 - std::log(2.0)) < 1e-10);
}

TEST_CASE("integrate_open reproduces the BEC entropy integral") {
    const double ln2 = std::log(2.0);
    const double h = integrate_open(
        [ln2](double z) { return 0.5 * (1.0 - z) / (ln2 * (1.0 - z * z)); }, 0.0, 1.0);
    CHECK(std::abs(h - 0.5) < 1e-9);
}

TEST_CASE("integrate_open is additive across interior splits") {
    const double ln2 = std::log(2.0);
    auto f = [ln2](double z) { return 0.5 * (1.0 - z) / (ln2 * (1.0 - z * z)); };
    SolverConfig cfg;
    const double whole = integrate_open(f, 0.0, 1.0, cfg);
    SplitMix64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const double m = 0.05 + 0.9 * rng.next_unit();
        const double split =
            integrate_open(f, 0.0, m, cfg) + integrate_open(f, m, 1.0, cfg);
        CHECK(std::abs(whole - split) <= 2.0 * cfg.quad_tol);
    }
}

TEST_CASE("integrate_open error paths") {
    SolverConfig tiny;
    tiny.max_panels = 64;
    // divergent integral: panel doubling cannot converge
    CHECK_THROWS_AS(integrate_open([](double z) { return 1.0 / z; }, 0.0, 1.0, tiny),
                    NoConvergence);
    // NaN at interior nodes
    CHECK_THROWS_AS(
        integrate_open([](double z) { return std::sqrt(z - 0.5); }, 0.0, 1.0),
        NonFinite);
    CHECK_THROWS_AS(integrate_open([](double) { return 1.0; }, 1.0, 0.0),
                    InvalidParameter);
}
