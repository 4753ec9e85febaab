// SPDX-License-Identifier: Apache-2.0
#include "jsl/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jsl {

namespace {
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kTwoPi = 6.28318530717958647693;

// I1 power series: sum_k (z/2)^(2k+1) / (k! (k+1)!). Entire, all terms
// positive, so it is accurate wherever it does not overflow; we cap its use
// at z = 30 where ~40 terms reach machine precision.
double i1_series(double z) {
    const double q = 0.25 * z * z;
    double term = 0.5 * z;
    double sum = term;
    for (int k = 1; k <= 80; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

// Scaled asymptotic series: e^{-z} I1(z) ~ (2 pi z)^{-1/2} *
// [1 - 3/(8z) - 15/(128 z^2) - ...]. Terms follow the recurrence
// t_k = t_{k-1} * ((2k-1)^2 - 4) / (8 z k). Truncated once terms stop
// improving; for z >= 30 that is far below double precision.
double i1_scaled_asymptotic(double z) {
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (odd * odd - 4.0) / (8.0 * z * k);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum / std::sqrt(kTwoPi * z);
}

void check_i1_domain(double z) {
    if (!(z >= 0.0) || !std::isfinite(z))
        throw std::invalid_argument("bessel_i1: argument must be finite and >= 0");
}
}  // namespace

double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - kLog2;
}

double sech_pow(double x, double m) { return std::exp(-m * log_cosh(x)); }

double gamma_ratio_half(double m) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("gamma_ratio_half: m must be finite and > 0");
    return std::exp(std::lgamma(0.5 * (m + 1.0)) - std::lgamma(0.5 * m));
}

double bessel_i1(double z) {
    check_i1_domain(z);
    if (z <= 30.0) return i1_series(z);
    return i1_scaled_asymptotic(z) * std::exp(z);
}

double bessel_i1_scaled(double z) {
    check_i1_domain(z);
    if (z <= 30.0) return i1_series(z) * std::exp(-z);
    return i1_scaled_asymptotic(z);
}

double bessel_i1_log(double z) {
    check_i1_domain(z);
    if (z == 0.0) return -std::numeric_limits<double>::infinity();
    if (z <= 30.0) return std::log(i1_series(z));
    return z + std::log(i1_scaled_asymptotic(z));
}

}  // namespace jsl
