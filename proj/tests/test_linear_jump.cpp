// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "jsl/linear_jump.hpp"
#include "jsl/quadrature.hpp"

using namespace jsl;

namespace {
constexpr double kAtomT1 = 0.3678794411714423;  // e^{-1}

// Analytic mixed law used to exercise the CDF/KS machinery independently of
// the Bessel closed form: atom a at 0, Exp(1) beyond.
struct MixedExp {
    double a;
    double cdf(double x) const { return x < 0.0 ? 0.0 : a + (1.0 - a) * (1.0 - std::exp(-x)); }
    double quantile_positive(double q) const { return -std::log(1.0 - q); }
};
}  // namespace

TEST_CASE("sample_path: zero-jump fraction matches e^{-t}") {
    const ModelParams params{1.0, 0.0, 1.0};
    const int n_paths = 1000000;
    const auto paths = sample_ensemble(1.0, params, 42, n_paths);
    int zeros = 0;
    for (const auto& p : paths) {
        if (p.position == 0.0) {
            ++zeros;
            CHECK(p.jump_count == 0);
        } else {
            CHECK(p.jump_count > 0);
            CHECK(p.position > 0.0);
        }
    }
    const double fraction = static_cast<double>(zeros) / n_paths;
    CHECK(fraction == doctest::Approx(kAtomT1).epsilon(0.0015 / kAtomT1));
}

TEST_CASE("sample_path: compound Poisson moments at t=5, lambda=2") {
    const ModelParams params{2.0, 0.0, 1.0};
    const int n_paths = 200000;
    const auto paths = sample_ensemble(5.0, params, 7, n_paths);
    double sum = 0.0, sum_sq = 0.0, count_sum = 0.0, count_sq = 0.0;
    for (const auto& p : paths) {
        sum += p.position;
        sum_sq += p.position * p.position;
        count_sum += p.jump_count;
        count_sq += static_cast<double>(p.jump_count) * p.jump_count;
    }
    const double mean = sum / n_paths;
    const double variance = sum_sq / n_paths - mean * mean;
    // E X = t/lambda = 2.5, Var X = 2t/lambda^2 = 2.5
    const double mean_tol = 3.0 * std::sqrt(2.5 / n_paths);
    CHECK(std::abs(mean - 2.5) < mean_tol);
    CHECK(variance == doctest::Approx(2.5).epsilon(0.03));

    // jump counts are Poisson(t): mean == variance
    const double count_mean = count_sum / n_paths;
    const double count_var = count_sq / n_paths - count_mean * count_mean;
    CHECK(count_mean == doctest::Approx(5.0).epsilon(0.01));
    CHECK(count_var == doctest::Approx(count_mean).epsilon(0.03));
}

TEST_CASE("sample_path: clock intensity scales with base_rate") {
    const ModelParams params{1.0, 0.0, 2.0};
    const auto paths = sample_ensemble(3.0, params, 5, 50000);
    double count_sum = 0.0;
    for (const auto& p : paths) count_sum += p.jump_count;
    // Poisson(t * base_rate) = Poisson(6)
    CHECK(count_sum / 50000.0 == doctest::Approx(6.0).epsilon(0.01));
}

TEST_CASE("sample_path: zero-fraction invariant over (t, M)") {
    for (auto [t, n_paths] : std::vector<std::pair<double, int>>{{0.5, 100000},
                                                                 {2.5, 100000}}) {
        const ModelParams params{1.0, 0.0, 1.0};
        const auto paths = sample_ensemble(t, params, 11, n_paths);
        double zeros = 0.0;
        for (const auto& p : paths) zeros += p.position == 0.0 ? 1.0 : 0.0;
        const double expected = std::exp(-t);
        const double tol = 4.0 * std::sqrt(expected * (1.0 - expected) / n_paths);
        CHECK(std::abs(zeros / n_paths - expected) < tol);
    }
}

TEST_CASE("sample_path: deterministic given the seed, streams independent") {
    const ModelParams params{1.0, 0.0, 1.0};
    const auto a = sample_ensemble(2.0, params, 99, 5000);
    const auto b = sample_ensemble(2.0, params, 99, 5000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].position == b[i].position);  // bit-identical
        CHECK(a[i].jump_count == b[i].jump_count);
    }
    const auto c = sample_ensemble(2.0, params, 100, 5000);
    int same = 0;
    for (std::size_t i = 0; i < a.size(); ++i) same += a[i].position == c[i].position;
    CHECK(same < 2500);  // different master seed, different paths (atoms may tie)
}

TEST_CASE("empirical_mixed_cdf: counting semantics") {
    // all samples at 0
    std::vector<PathSample> zeros(10);
    const auto all_zero = EmpiricalMixedCdf::from_samples(zeros);
    CHECK(all_zero.atom == 1.0);
    CHECK(all_zero.value(0.0) == 1.0);
    CHECK(all_zero.value(5.0) == 1.0);

    // {0, 1, 2}: F(1.5) = 2/3
    const auto three = EmpiricalMixedCdf::from_positions({0.0, 1.0, 2.0});
    CHECK(three.atom == doctest::Approx(1.0 / 3.0));
    CHECK(three.value(1.5) == doctest::Approx(2.0 / 3.0));
    CHECK(three.value(0.5) == doctest::Approx(1.0 / 3.0));
    CHECK(three.value_left(1.0) == doctest::Approx(1.0 / 3.0));
    CHECK(three.value(1.0) == doctest::Approx(2.0 / 3.0));

    CHECK_THROWS_AS(EmpiricalMixedCdf::from_positions({}), std::invalid_argument);
}

TEST_CASE("ks_distance: identical CDFs give zero") {
    const auto empirical = EmpiricalMixedCdf::from_positions({0.0, 1.0, 2.0, 0.0});
    // exact mixed CDF equal to the empirical one (same atoms): both one-sided
    // limits agree, distance is exactly zero
    auto self = [&](double x) { return empirical.value(x); };
    auto self_left = [&](double x) { return empirical.value_left(x); };
    CHECK(ks_distance(empirical, self, self_left) == doctest::Approx(0.0));
}

TEST_CASE("ks_distance: atom mismatch dominates") {
    // empirical atom 0.5, conditional positives on the exact quantiles;
    // sup should be |0.5 - e^{-1}| up to the step resolution
    const MixedExp exact{kAtomT1};
    const int positives = 10000, zeros = 10000;
    std::vector<double> samples(zeros, 0.0);
    for (int j = 1; j <= positives; ++j)
        samples.push_back(exact.quantile_positive((j - 0.5) / positives));
    const auto empirical = EmpiricalMixedCdf::from_positions(std::move(samples));
    CHECK(empirical.atom == doctest::Approx(0.5));
    const double distance =
        ks_distance(empirical, [&](double x) { return exact.cdf(x); });
    CHECK(distance == doctest::Approx(0.5 - kAtomT1).epsilon(1e-3));
}

TEST_CASE("ks_distance: calibration against exact inverse-CDF samples") {
    // 1e5 exact draws from the mixed law should sit below the 95th percentile
    // of the KS distribution, 1.36/sqrt(n) (seed frozen).
    const MixedExp exact{kAtomT1};
    Rng rng(2024);
    const int count = 100000;
    std::vector<double> samples;
    samples.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = rng.uniform01();
        samples.push_back(u < exact.a
                              ? 0.0
                              : exact.quantile_positive((u - exact.a) / (1.0 - exact.a)));
    }
    const auto empirical = EmpiricalMixedCdf::from_positions(std::move(samples));
    const double distance =
        ks_distance(empirical, [&](double x) { return exact.cdf(x); });
    CHECK(distance < 1.36 / std::sqrt(static_cast<double>(count)));
}

TEST_CASE("Monte Carlo vs closed form: KS below 0.01") {
    for (auto [lambda, t] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {2.0, 5.0}, {0.5, 3.0}}) {
        const ModelParams params{lambda, 0.0, 1.0};
        const auto paths = sample_ensemble(t, params, 4242, 100000);
        const auto empirical = EmpiricalMixedCdf::from_samples(paths);
        const LinearClosedForm form{lambda, t};
        const auto exact = form.cdf_at_sorted(empirical.positives);
        const double distance = ks_distance(empirical, form.atom_weight(), exact);
        CHECK(distance < 0.01);
    }
}

TEST_CASE("general_init_density: delta initial conditions translate the kernel") {
    const ModelParams params{1.0, 0.0, 1.0};
    const auto f0 = InitialDensity::delta(0.0);
    for (double x : {0.0, 0.3, 1.0, 4.0}) {
        const auto general = general_init_density(f0, x, 1.5, params);
        const auto direct = linear_density(x, 1.5, 1.0);
        CHECK(general.atom_weight == doctest::Approx(direct.atom_weight));
        CHECK(general.atom_location == 0.0);
        CHECK(general.continuous == doctest::Approx(direct.continuous).epsilon(1e-14));
    }
    const auto fa = InitialDensity::delta(2.5);
    for (double x : {2.5, 3.0, 6.0}) {
        const auto shifted = general_init_density(fa, x, 1.5, params);
        const auto direct = linear_density(x - 2.5, 1.5, 1.0);
        CHECK(shifted.atom_location == 2.5);
        CHECK(shifted.continuous == doctest::Approx(direct.continuous).epsilon(1e-14));
    }
    // ahead of the start point there is nothing
    CHECK(general_init_density(fa, 1.0, 1.5, params).continuous == 0.0);
}

TEST_CASE("general_init_density: uniform start shifts the mean by t/lambda") {
    const double t = 2.0, lambda = 2.0;
    const ModelParams params{lambda, 0.0, 1.0};
    const auto f = InitialDensity::uniform(0.0, 1.0);
    const double upper = 1.0 + LinearClosedForm{lambda, t}.effective_support();
    const double mean = integrate_value(
        [&](double x) { return x * general_init_density(f, x, t, params).continuous; },
        0.0, upper, 1e-10, 1e-8);
    CHECK(mean == doctest::Approx(0.5 + t / lambda).epsilon(1e-5));
}

TEST_CASE("general_init_density: unit mass for smooth initial densities") {
    const double t = 1.0, lambda = 1.0;
    const ModelParams params{lambda, 0.0, 1.0};
    const double kernel_support = LinearClosedForm{lambda, t}.effective_support();

    const auto uniform_f = InitialDensity::uniform(0.0, 2.0);
    const auto gaussian_f = InitialDensity::gaussian(3.0, 0.5);
    std::vector<double> tri{0.0, 0.5, 1.0, 0.5, 0.0};
    const auto table_f = InitialDensity::table(0.0, 0.5, tri);

    for (const auto* f : {&uniform_f, &gaussian_f, &table_f}) {
        const auto [lo, hi] = f->support();
        // split the total-mass integral at the density's non-smooth points
        std::vector<double> cuts{lo};
        for (double b : f->breakpoints())
            if (b > lo && b < hi + kernel_support) cuts.push_back(b);
        cuts.push_back(hi + kernel_support);
        std::sort(cuts.begin(), cuts.end());
        double mass = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            mass += integrate_value(
                [&](double x) {
                    return general_init_density(*f, x, t, params).continuous;
                },
                cuts[i], cuts[i + 1], 1e-10, 1e-8);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    }
}
