#include <cmath>

#include "doctest.h"

#include "bmsord/extremal.hpp"
#include "bmsord/lambda.hpp"
#include "bmsord/sampler.hpp"

using namespace bmsord;

namespace {

// Frozen reference values for c = 0.5, cross-checked against brute-force
// scans and the table rows printed to four decimals.
constexpr double kEps05 = 0.11002786443836221;
constexpr double kXbsc05 = 0.7799442711232756;
constexpr double kZbsc05 = 0.4483673269440353;

}  // namespace

TEST_CASE("epsilon_bsc solves the capacity equation") {
    CHECK(epsilon_bsc(0.5) == doctest::Approx(kEps05).epsilon(1e-10));
    CHECK(epsilon_bsc(0.188722) == doctest::Approx(0.25).epsilon(1e-5));
    SplitMix64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const double c = 1e-3 + (1.0 - 2e-3) * rng.next_unit();
        const double eps = epsilon_bsc(c);
        CHECK(std::abs(1.0 - binary_entropy(eps) - c) < 1e-10);
    }
    CHECK_THROWS_AS(epsilon_bsc(0.0), InvalidParameter);
    CHECK_THROWS_AS(epsilon_bsc(1.0), InvalidParameter);
}

TEST_CASE("extremal_profile invariants") {
    SplitMix64 rng(22);
    for (int i = 0; i < 50; ++i) {
        const double c = 1e-3 + (1.0 - 2e-3) * rng.next_unit();
        const ExtremalProfile p = extremal_profile(c);
        CHECK(std::abs(1.0 - binary_entropy(p.eps_bsc) - c) < 1e-10);
        CHECK(p.z_bsc > 0.0);
        CHECK(p.z_bsc < p.x_bsc());
    }
    const ExtremalProfile p = extremal_profile(0.5);
    CHECK(p.z_bsc == doctest::Approx(kZbsc05).epsilon(1e-9));
    // the closed form for z_bsc is z_of_x at the BSC position
    CHECK(p.z_bsc == doctest::Approx(z_of_x(p.x_bsc())).epsilon(1e-12));
}

TEST_CASE("lambda_bar endpoints and seam") {
    const ExtremalProfile p = extremal_profile(0.5);
    CHECK(lambda_bar(p, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lambda_bar(p, 1.0) == 0.0);
    const double seam = p.x_bsc();
    CHECK(lambda_bar(p, seam) == doctest::Approx(2.0 * p.eps_bsc).epsilon(1e-10));
    CHECK(lambda_bar(p, seam - 1e-12) == doctest::Approx(2.0 * p.eps_bsc).epsilon(1e-9));
    CHECK_THROWS_AS(lambda_bar(p, -0.1), DomainError);
    CHECK_THROWS_AS(lambda_bar(p, 1.1), DomainError);
}

TEST_CASE("lambda_star formula") {
    const ExtremalProfile p = extremal_profile(0.5);
    CHECK(lambda_star(p, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lambda_star(p, 1.0) == 0.0);
    CHECK(lambda_star(p, 0.5) == doctest::Approx(0.3205357219176058).epsilon(1e-9));
    // continuous at the seam
    CHECK(lambda_star(p, p.x_bsc() - 1e-13) ==
          doctest::Approx(1.0 - p.x_bsc()).epsilon(1e-9));
}

TEST_CASE("least degraded channel structure and capacity") {
    const DiscreteChannel ch = least_degraded_channel(0.5);
    REQUIRE(ch.size() == 2);
    CHECK(ch.masses()[0].x == 0.0);
    CHECK(ch.masses()[0].alpha == doctest::Approx(0.358929).epsilon(1e-5));
    CHECK(ch.masses()[1].x == doctest::Approx(kXbsc05).epsilon(1e-10));
    CHECK(ch.masses()[1].alpha == doctest::Approx(0.641071).epsilon(1e-5));
    // mass at the BSC position is c/(1-2eps)
    CHECK(ch.masses()[1].alpha == doctest::Approx(0.5 / kXbsc05).epsilon(1e-12));

    // its Lambda profile is lambda_star everywhere
    const PiecewiseLinear pl = lambda_profile(ch);
    const ExtremalProfile p = extremal_profile(0.5);
    for (int i = 0; i <= 100; ++i) {
        const double z = i / 100.0;
        CHECK(std::abs(pl(z) - lambda_star(p, z)) < 1e-12);
    }

    SplitMix64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const double c = 1e-2 + 0.98 * rng.next_unit();
        CHECK(std::abs(capacity(least_degraded_channel(c)) - capacity_star(c)) < 1e-12);
        // entropy in closed form: 1 - c^2/(1-2eps)
        const double eps = epsilon_bsc(c);
        CHECK(entropy(least_degraded_channel(c)) ==
              doctest::Approx(1.0 - c * c / (1.0 - 2.0 * eps)).epsilon(1e-12));
    }
}

TEST_CASE("capacity_star against table rows") {
    CHECK(capacity_star(0.5) == doctest::Approx(0.3205357219176058).epsilon(1e-10));
    CHECK(0.5 - capacity_star(0.5) == doctest::Approx(0.1795).epsilon(3e-4));
    CHECK(0.1 - capacity_star(0.1) == doctest::Approx(0.0728).epsilon(5e-4));
    CHECK(0.9 - capacity_star(0.9) == doctest::Approx(0.0684).epsilon(5e-4));
}

TEST_CASE("z_of_x closed form and monotonicity") {
    CHECK(z_of_x(0.5) == doctest::Approx(0.2618595071429149).epsilon(1e-12));
    CHECK(z_of_x(kXbsc05) == doctest::Approx(kZbsc05).epsilon(1e-10));
    double prev = 0.0;
    for (int k = 1; k <= 10000; ++k) {
        const double x = static_cast<double>(k) / 10001.0;
        const double z = z_of_x(x);
        CHECK(z > prev);
        CHECK(z < 1.0);
        prev = z;
    }
    CHECK_THROWS_AS(z_of_x(0.0), DomainError);
    CHECK_THROWS_AS(z_of_x(1.0), DomainError);
}

TEST_CASE("x_of_z inverts z_of_x and satisfies the fixed point") {
    CHECK(x_of_z(kZbsc05) == doctest::Approx(kXbsc05).epsilon(1e-10));
    CHECK(x_of_z(0.2618595071429149) == doctest::Approx(0.5).epsilon(1e-10));

    // Forming the residual needs 1-x by subtraction, whose quantization
    // error (ulp(1)/(1-x)) blows past 1e-9 once z exceeds ~0.93; sample
    // below that.
    SplitMix64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const double z = 1e-3 + (0.9 - 1e-3) * rng.next_unit();
        const double x = x_of_z(z);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        const double residual =
            x - (std::pow(1.0 - x, (z - 1.0) / (z + 1.0)) - 1.0);
        CHECK(std::abs(residual) < 1e-9);
        CHECK(z_of_x(x) == doctest::Approx(z).epsilon(1e-10));
    }
    CHECK_THROWS_AS(x_of_z(0.0), DomainError);
    CHECK_THROWS_AS(x_of_z(1.0), DomainError);
}

TEST_CASE("gamma_of_z endpoints") {
    const ExtremalProfile p = extremal_profile(0.5);
    CHECK(std::abs(gamma_of_z(p, p.z_bsc)) < 1e-9);
    CHECK(gamma_of_z(p, 1.0 - 1e-6) == doctest::Approx(0.5).epsilon(1e-9));

    const double g = gamma_of_z(p, 0.7);
    CHECK(g == doctest::Approx(0.4543033983074664).epsilon(1e-9));
    CHECK(g > 0.0);
    CHECK(g < 0.5);

    CHECK_THROWS_AS(gamma_of_z(p, p.z_bsc - 1e-3), DomainError);
    CHECK_THROWS_AS(gamma_of_z(p, 1.0), DomainError);
}

TEST_CASE("lambda_under cases and seams") {
    const ExtremalProfile p = extremal_profile(0.5);
    CHECK(lambda_under(p, 0.0) == doctest::Approx(0.2200557288767244).epsilon(1e-10));
    CHECK(lambda_under(p, 1.0) == 0.0);
    CHECK(lambda_under(p, 0.7) == doctest::Approx(0.14769244394620984).epsilon(1e-9));

    // continuous at z_bsc: the BSC constant meets the optimized branch
    const double left = lambda_under(p, std::nextafter(p.z_bsc, 0.0));
    const double right = lambda_under(p, p.z_bsc);
    CHECK(std::abs(left - right) < 1e-10);

    // vanishes at the right end
    CHECK(lambda_under(p, 1.0 - 1e-8) < 1e-6);
}

TEST_CASE("brute-force oracle agrees with the closed-form optimum") {
    for (double c : {0.3, 0.5, 0.7}) {
        const ExtremalProfile p = extremal_profile(c);
        for (int j = 0; j < 5; ++j) {
            const double z = p.z_bsc + (1.0 - 1e-3 - p.z_bsc) * j / 4.0;
            const double brute = lambda_opt_bruteforce(c, z, 20000);
            CHECK(std::abs(brute - lambda_under(p, z)) < 1e-4);
            CHECK(brute >= lambda_under(p, z) - 1e-12);  // grid min cannot beat the true min
        }
    }
    CHECK_THROWS_AS(lambda_opt_bruteforce(0.5, 0.7, 100), InvalidParameter);
    CHECK_THROWS_AS(lambda_opt_bruteforce(0.5, 0.1, 20000), DomainError);
}

TEST_CASE("capacity_under against table rows") {
    CHECK(capacity_under(0.5) - 0.5 == doctest::Approx(0.1243).epsilon(4e-3));
    CHECK(capacity_under(0.2) - 0.2 == doctest::Approx(0.1009).epsilon(5e-3));
    CHECK(capacity_under(0.8) - 0.8 == doctest::Approx(0.0762).epsilon(7e-3));
    const double cu = capacity_under(0.5);
    CHECK(cu > 0.5);
    CHECK(cu < 1.0);
}

TEST_CASE("gap_row assembles both capacities") {
    const CapacityGapRow r = gap_row(0.4);
    CHECK(r.c == 0.4);
    CHECK(r.d_gap == doctest::Approx(0.4 - r.c_star).epsilon(1e-15));
    CHECK(r.u_gap == doctest::Approx(r.c_under - 0.4).epsilon(1e-15));
    CHECK(r.d_gap == doctest::Approx(0.1739).epsilon(3e-4));
    CHECK(r.u_gap == doctest::Approx(0.1257).epsilon(4e-4));
}

TEST_CASE("lambda_star dominates lambda_bar only below the tangency capacity") {
    // The lambda_star line majorizes lambda_bar as long as the line's slope
    // at the seam is at least as steep as the curve's. That holds up to
    // c ~ 0.56; beyond it lambda_bar pushes above the line on part of
    // [0, 1-2eps], so the two-mass closed form no longer dominates the
    // whole family there.
    for (double c : {0.1, 0.3, 0.5}) {
        const ExtremalProfile p = extremal_profile(c);
        for (int i = 0; i <= 1000; ++i) {
            const double z = i / 1000.0;
            CHECK(lambda_star(p, z) >= lambda_bar(p, z) - 1e-10);
        }
    }
    for (double c : {0.6, 0.8}) {
        const ExtremalProfile p = extremal_profile(c);
        double bulge = 0.0, bulge_z = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double z = i / 1000.0;
            if (lambda_bar(p, z) - lambda_star(p, z) > bulge) {
                bulge = lambda_bar(p, z) - lambda_star(p, z);
                bulge_z = z;
            }
        }
        CHECK(bulge > 5e-5);
        CHECK(bulge_z > 0.6);
        CHECK(bulge_z < p.x_bsc());
    }
}

TEST_CASE("envelope relation and shapes") {
    for (double c : {0.2, 0.5, 0.8}) {
        const ExtremalProfile p = extremal_profile(c);
        const double seam = p.x_bsc();

        // beyond the seam both curves are exactly 1-z
        for (int i = 0; i <= 1000; ++i) {
            const double z = i / 1000.0;
            if (z >= seam) CHECK(lambda_star(p, z) == lambda_bar(p, z));
        }

        // lambda_star is exactly linear left of the seam
        for (int i = 0; i + 2 <= 1000; ++i) {
            const double z0 = i / 1000.0, z1 = (i + 1) / 1000.0, z2 = (i + 2) / 1000.0;
            if (z2 >= seam) break;
            const double second =
                lambda_star(p, z0) + lambda_star(p, z2) - 2.0 * lambda_star(p, z1);
            CHECK(std::abs(second) < 1e-12);
        }

        // lambda_under is nonincreasing and concave on the whole interval
        double prev = lambda_under(p, 0.0);
        for (int i = 1; i <= 1000; ++i) {
            const double v = lambda_under(p, i / 1000.0);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
        for (int i = 0; i + 2 <= 1000; ++i) {
            const double v0 = lambda_under(p, i / 1000.0);
            const double v1 = lambda_under(p, (i + 1) / 1000.0);
            const double v2 = lambda_under(p, (i + 2) / 1000.0);
            CHECK(v0 + v2 - 2.0 * v1 <= 1e-9);
        }

        // lambda_bar is convex on the left part of its first branch (its
        // curvature changes sign near z = 0.6075, before the seam for
        // larger c)
        const double convex_end = std::min(0.55, seam - 1e-3);
        for (int i = 0; i + 2 <= 1000; ++i) {
            const double z0 = i / 1000.0, z1 = (i + 1) / 1000.0, z2 = (i + 2) / 1000.0;
            if (z2 >= convex_end) break;
            CHECK(lambda_bar(p, z0) + lambda_bar(p, z2) - 2.0 * lambda_bar(p, z1) >=
                  -1e-9);
        }
    }
}
