// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jsl/linear_process.hpp"
#include "jsl/quadrature.hpp"

using namespace jsl;

TEST_CASE("linear_density: atom weight and small-x limit") {
    // Poisson probability of zero jumps at t=1
    const auto value = linear_density(0.5, 1.0, 1.0);
    CHECK(value.atom_weight == doctest::Approx(0.3678794411714423).epsilon(1e-14));

    // x -> 0+: continuous tends to exp(-t) * lambda * t
    const auto at_zero = linear_density(0.0, 1.0, 1.0);
    CHECK(at_zero.continuous == doctest::Approx(0.3678794411714423).epsilon(1e-13));
    const auto near_zero = linear_density(1e-12, 1.0, 1.0);
    CHECK(near_zero.continuous == doctest::Approx(at_zero.continuous).epsilon(1e-6));

    CHECK(linear_density(3.0, 2.0, 0.5).continuous >= 0.0);
    CHECK_THROWS_AS(linear_density(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_density(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_density(1.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("linear_density: continuous part nonnegative everywhere") {
    for (double lambda : {0.5, 1.0, 2.0})
        for (double t : {0.5, 5.0, 50.0})
            for (double x = 0.0; x <= 200.0; x += 0.37) {
                const double value = linear_density(x, t, lambda).continuous;
                CHECK(value >= 0.0);
                CHECK(std::isfinite(value));
            }
}

TEST_CASE("linear_density: unit mass for a grid of (lambda, t)") {
    for (double lambda : {0.5, 1.0, 2.0})
        for (double t : {0.5, 1.0, 5.0, 20.0}) {
            const LinearClosedForm form{lambda, t};
            const double mass = form.total_mass(form.effective_support());
            CHECK(std::abs(mass - 1.0) < 1e-8);
        }
    // the (2, 3) pair exercised at a looser documented bound
    const LinearClosedForm form{2.0, 3.0};
    CHECK(form.total_mass(100.0) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("linear_density: moment identities") {
    // mean = t/lambda, second central moment = 2t/lambda^2
    for (double lambda : {1.0, 2.0})
        for (double t : {1.0, 5.0}) {
            const LinearClosedForm form{lambda, t};
            const double upper = form.effective_support();
            const double mean = integrate_value(
                [&](double x) { return x * form.continuous(x); }, 0.0, upper, 1e-12,
                1e-12);
            CHECK(mean == doctest::Approx(t / lambda).epsilon(1e-6));
            const double second = integrate_value(
                [&](double x) {
                    const double d = x - t / lambda;
                    return d * d * form.continuous(x);
                },
                0.0, upper, 1e-12, 1e-12);
            const double atom_term = form.atom_weight() * (t / lambda) * (t / lambda);
            CHECK(second + atom_term ==
                  doctest::Approx(2.0 * t / (lambda * lambda)).epsilon(1e-5));
        }
}

TEST_CASE("linear_laplace: boundary values, mean, transform match") {
    // s=0: total mass
    CHECK(linear_laplace(0.0, 3.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(linear_laplace(0.0, 0.7, 0.5) == doctest::Approx(1.0).epsilon(1e-14));

    // -d/ds at s=0 equals the mean t/lambda (central finite difference)
    for (double lambda : {1.0, 2.0})
        for (double t : {1.0, 4.0}) {
            const double h = 1e-5;
            const double derivative =
                (linear_laplace(h, t, lambda) - linear_laplace(0.0, t, lambda)) / h;
            // one-sided at the boundary; Richardson with h/2 for second order
            const double derivative_half =
                (linear_laplace(h / 2, t, lambda) - linear_laplace(0.0, t, lambda)) /
                (h / 2);
            const double extrapolated = 2.0 * derivative_half - derivative;
            CHECK(-extrapolated == doctest::Approx(t / lambda).epsilon(1e-6));
        }

    // equals atom + numerical Laplace transform of the continuous part
    for (double s : {0.1, 1.0, 10.0}) {
        for (auto [lambda, t] : std::vector<std::pair<double, double>>{
                 {1.0, 2.0}, {2.0, 3.0}, {0.5, 5.0}}) {
            const LinearClosedForm form{lambda, t};
            const double numerical =
                form.atom_weight() +
                integrate_value(
                    [&](double x) { return std::exp(-s * x) * form.continuous(x); },
                    0.0, form.effective_support(), 1e-13, 1e-12);
            const double closed = linear_laplace(s, t, lambda);
            CHECK(closed == doctest::Approx(numerical).epsilon(1e-6));
        }
    }

    // s=1, t=2, lambda=1 within 1e-7
    const LinearClosedForm form{1.0, 2.0};
    const double numerical =
        form.atom_weight() +
        integrate_value([&](double x) { return std::exp(-x) * form.continuous(x); },
                        0.0, form.effective_support(), 1e-13, 1e-13);
    CHECK(linear_laplace(1.0, 2.0, 1.0) == doctest::Approx(numerical).epsilon(1e-7));

    CHECK_THROWS_AS(linear_laplace(-0.1, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("linear_asymptotic: exponent zero at lambda*x = t, peak near t/lambda") {
    // at lambda*x = t the exponential factor is exactly 1
    const double lambda = 2.0, t = 8.0;
    const double x_star = t / lambda;
    const double expected = std::pow(lambda * t, 0.25) /
                            (2.0 * std::sqrt(3.141592653589793) * std::pow(x_star, 0.75));
    CHECK(linear_asymptotic(x_star, t, lambda) == doctest::Approx(expected).epsilon(1e-13));

    // golden-section search for the maximizer; within 2% of t/lambda at t=200
    auto golden_max = [](auto f, double a, double b) {
        const double phi = 0.6180339887498949;
        double c = b - phi * (b - a), d = a + phi * (b - a);
        for (int i = 0; i < 200; ++i) {
            if (f(c) > f(d))
                b = d;
            else
                a = c;
            c = b - phi * (b - a);
            d = a + phi * (b - a);
        }
        return 0.5 * (a + b);
    };
    const double peak = golden_max(
        [](double x) { return linear_asymptotic(x, 200.0, 1.0); }, 100.0, 320.0);
    CHECK(std::abs(peak - 200.0) / 200.0 < 0.02);

    CHECK_THROWS_AS(linear_asymptotic(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("linear_asymptotic: L1-close to the exact density at large t") {
    // relative L1 distance over [100, 320] below 5% at lambda=1, t=200
    const LinearClosedForm form{1.0, 200.0};
    const double l1_diff = integrate_value(
        [&](double x) {
            return std::abs(form.continuous(x) - linear_asymptotic(x, 200.0, 1.0));
        },
        100.0, 320.0, 1e-10, 1e-8);
    const double l1_ref = integrate_value(
        [&](double x) { return form.continuous(x); }, 100.0, 320.0, 1e-10, 1e-8);
    CHECK(l1_diff / l1_ref < 0.05);
}

TEST_CASE("LinearClosedForm: cdf and batch cdf agree") {
    const LinearClosedForm form{1.5, 2.5};
    const std::vector<double> points{0.1, 0.5, 1.0, 2.0, 4.0, 9.0};
    const auto batch = form.cdf_at_sorted(points);
    for (std::size_t i = 0; i < points.size(); ++i)
        CHECK(batch[i] == doctest::Approx(form.cdf(points[i])).epsilon(1e-9));
    CHECK(form.cdf(0.0) == doctest::Approx(form.atom_weight()).epsilon(1e-14));
    CHECK(form.cdf(1e9) == doctest::Approx(1.0).epsilon(1e-8));
}
