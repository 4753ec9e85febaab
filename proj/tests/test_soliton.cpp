// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jsl/quadrature.hpp"
#include "jsl/soliton.hpp"
#include "jsl/special_functions.hpp"

using namespace jsl;

TEST_CASE("soliton_normalization: closed values against quadrature") {
    // C_2 = 1/2 (integral sech^2 = 2), C_1 = 1/pi, C_4 = 3/4
    CHECK(soliton_normalization(2.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(soliton_normalization(1.0) ==
          doctest::Approx(0.3183098861837907).epsilon(1e-13));
    CHECK(soliton_normalization(4.0) == doctest::Approx(0.75).epsilon(1e-13));

    // C_m must equal 1 / integral(sech^m) for all exponents in the working set
    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
        const double mass =
            integrate_value([m](double xi) { return sech_pow(xi, m); }, -50.0, 50.0,
                            1e-12, 1e-12);
        CHECK(soliton_normalization(m) == doctest::Approx(1.0 / mass).epsilon(1e-10));
    }

    CHECK_THROWS_AS(soliton_normalization(0.0), std::invalid_argument);
    CHECK_THROWS_AS(soliton_normalization(-2.0), std::invalid_argument);
}

TEST_CASE("soliton_density: center value, symmetry, unit mass") {
    CHECK(soliton_density(0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-13));
    // even symmetry, exactly (log_cosh is even in exact arithmetic)
    CHECK(soliton_density(3.0, 2.0) == soliton_density(-3.0, 2.0));
    CHECK(soliton_density(17.25, 0.5) == soliton_density(-17.25, 0.5));

    // quadrature of the m=3 profile over [-40, 40] is 1 to 1e-10
    const double mass = integrate_value(
        [](double xi) { return soliton_density(xi, 3.0); }, -40.0, 40.0, 1e-12, 1e-12);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));

    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
        const double total = integrate_value(
            [m](double xi) { return soliton_density(xi, m); }, -50.0, 50.0, 1e-12,
            1e-12);
        CHECK(std::abs(total - 1.0) < 1e-9);
    }

    // log-space evaluation: huge m*|xi| underflows to zero without overflow
    CHECK(soliton_density(400.0, 8.0) == 0.0);
    CHECK(std::isfinite(soliton_density(50.0, 300.0)));
}

TEST_CASE("soliton_velocity: the two velocity constants") {
    // m=1: both equal 1/pi
    auto v1 = soliton_velocity(1.0);
    CHECK(v1.derived == doctest::Approx(0.3183098861837907).epsilon(1e-13));
    CHECK(v1.paper == doctest::Approx(0.3183098861837907).epsilon(1e-13));

    // m=2: derived 1/4 (the value the traveling equation forces), C_m constant 1/2
    auto v2 = soliton_velocity(2.0);
    CHECK(v2.derived == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(v2.paper == doctest::Approx(0.5).epsilon(1e-13));

    auto v4 = soliton_velocity(4.0);
    CHECK(v4.derived == doctest::Approx(0.1875).epsilon(1e-13));
    CHECK(v4.paper == doctest::Approx(0.75).epsilon(1e-13));

    // algebraic identity of the implementation: derived * m == C_m exactly
    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0, 64.0})
        CHECK(soliton_velocity(m).derived * m == soliton_normalization(m));

    CHECK_THROWS_AS(soliton_velocity(-1.0), std::invalid_argument);
}

TEST_CASE("soliton_velocity: barycenter-drift quadrature oracle") {
    // V = (1/lambda) * integral Omega(xi) p(xi) dxi with lambda = m
    for (double m : {1.0, 2.0, 4.0}) {
        const double mean_rate = integrate_value(
            [m](double xi) { return soliton_omega(xi, m) * soliton_density(xi, m); },
            -50.0, 50.0, 1e-12, 1e-12);
        CHECK(soliton_velocity(m).derived == doctest::Approx(mean_rate / m).epsilon(1e-10));
    }
}

TEST_CASE("soliton_omega: closed form vs suffix quadrature of g*p") {
    // Omega(0, 2) = C_2 = 0.5
    CHECK(soliton_omega(0.0, 2.0) == doctest::Approx(0.5).epsilon(1e-13));
    // far left: all mass ahead, approaches 2 C_m; at xi = -10 the deficit
    // 2 e^{-20} is still visible, by xi = -20 it is below double epsilon
    CHECK(soliton_omega(-10.0, 2.0) == doctest::Approx(0.9999999979).epsilon(1e-10));
    CHECK(soliton_omega(-20.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    // far right: no mass ahead
    CHECK(soliton_omega(60.0, 2.0) == doctest::Approx(0.0).epsilon(1e-12));

    // matches the suffix integral of g*p with g = cosh^{-(2-m)} on a xi grid
    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
        const double n = 2.0 - m;
        for (double xi : {-8.0, -2.0, -0.5, 0.0, 0.5, 2.0, 8.0}) {
            const double suffix = integrate_value(
                [m, n](double eta) {
                    return sech_pow(eta, n) * soliton_density(eta, m);
                },
                xi, 60.0, 1e-12, 1e-12);
            CHECK(soliton_omega(xi, m) == doctest::Approx(suffix).epsilon(1e-8));
        }
    }
}

TEST_CASE("soliton_omega: monotone nonincreasing, bounded by [0, 2 C_m]") {
    for (double m : {0.5, 1.0, 2.0, 3.0, 4.0, 8.0}) {
        const double bound = 2.0 * soliton_normalization(m);
        double prev = soliton_omega(-30.0, m);
        for (double xi = -30.0; xi <= 30.0; xi += 0.25) {
            const double value = soliton_omega(xi, m);
            CHECK(value >= 0.0);
            CHECK(value <= bound + 1e-15);
            CHECK(value <= prev + 1e-15);
            prev = value;
        }
    }
}

TEST_CASE("soliton_cdf: endpoints, center, m=2 closed form") {
    CHECK(soliton_cdf(-50.0, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(soliton_cdf(50.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(soliton_cdf(0.0, 3.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(soliton_cdf(1.0, 2.0) ==
          doctest::Approx(0.5 * (1.0 + std::tanh(1.0))).epsilon(1e-12));
    // cross-check the generic quadrature route against the m=2 closed form
    const double generic = integrate_value(
        [](double u) { return soliton_density(u, 2.0); }, -40.0, 1.3, 1e-12, 1e-12);
    CHECK(soliton_cdf(1.3, 2.0) == doctest::Approx(generic).epsilon(1e-10));
}

TEST_CASE("SolitonProfile: construction validates normalization") {
    const SolitonProfile profile = SolitonProfile::make(2.0);
    CHECK(profile.c_m == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(profile.v_derived == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(profile.v_paper == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(profile.density(0.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(profile.omega(0.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(SolitonProfile::make(0.0), std::invalid_argument);
}

TEST_CASE("peak heights C_m strictly increase with m") {
    // table-top (small m) to sharply peaked (large m) ordering
    const double c1 = soliton_normalization(1.0);
    const double c2 = soliton_normalization(2.0);
    const double c3 = soliton_normalization(3.0);
    const double c4 = soliton_normalization(4.0);
    CHECK(c1 == doctest::Approx(0.3183098861837907).epsilon(1e-12));
    CHECK(c2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c3 == doctest::Approx(0.6366197723675814).epsilon(1e-12));  // 2/pi
    CHECK(c4 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(c1 < c2);
    CHECK(c2 < c3);
    CHECK(c3 < c4);
}
