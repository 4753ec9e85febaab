// SPDX-License-Identifier: Apache-2.0
#include "jsl/linear_process.hpp"

#include <cmath>
#include <stdexcept>

#include "jsl/quadrature.hpp"
#include "jsl/special_functions.hpp"

namespace jsl {

namespace {
constexpr double kSqrtPi = 1.77245385090551602730;

void check_time_rate(double t, double lambda, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument(std::string(who) + ": t must be finite and > 0");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument(std::string(who) + ": lambda must be finite and > 0");
}

double continuous_part(double x, double t, double lambda) {
    if (x == 0.0) return std::exp(-t) * lambda * t;
    const double z = 2.0 * std::sqrt(lambda * x * t);
    // exponent z - t - lambda*x = -(sqrt(lambda*x) - sqrt(t))^2 <= 0
    const double root_diff = std::sqrt(lambda * x) - std::sqrt(t);
    return std::sqrt(lambda * t / x) * bessel_i1_scaled(z) *
           std::exp(-root_diff * root_diff);
}
}  // namespace

LinearDensityValue linear_density(double x, double t, double lambda) {
    check_time_rate(t, lambda, "linear_density");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument(
            "linear_density: x must be finite and >= 0 (right-oriented process)");
    return {std::exp(-t), continuous_part(x, t, lambda)};
}

double linear_laplace(double s, double t, double lambda) {
    check_time_rate(t, lambda, "linear_laplace");
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("linear_laplace: s must be finite and >= 0");
    return std::exp(-t + t * lambda / (lambda + s));
}

double linear_asymptotic(double x, double t, double lambda) {
    check_time_rate(t, lambda, "linear_asymptotic");
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("linear_asymptotic: x must be finite and > 0");
    const double root_diff = std::sqrt(lambda * x) - std::sqrt(t);
    return std::pow(lambda * t, 0.25) / (2.0 * kSqrtPi * std::pow(x, 0.75)) *
           std::exp(-root_diff * root_diff);
}

double LinearClosedForm::atom_weight() const { return std::exp(-t); }

double LinearClosedForm::continuous(double x) const {
    return linear_density(x, t, lambda).continuous;
}

double LinearClosedForm::effective_support() const {
    // The exponent -(sqrt(lambda*x)-sqrt(t))^2 reaches -40 (~4e-18 of peak)
    // at sqrt(lambda*x) = sqrt(t) + sqrt(40).
    const double root = std::sqrt(t) + 6.5;
    return root * root / lambda;
}

double LinearClosedForm::cdf(double x) const {
    if (x < 0.0) return 0.0;
    const double upper = std::min(x, effective_support());
    double integral = 0.0;
    if (upper > 0.0)
        integral = integrate_value([this](double u) { return continuous(u); }, 0.0,
                                   upper, 1e-12, 1e-12);
    return atom_weight() + integral;
}

std::vector<double> LinearClosedForm::cdf_at_sorted(
    std::span<const double> sorted_x) const {
    std::vector<double> out;
    out.reserve(sorted_x.size());
    double acc = atom_weight();
    double prev = 0.0;
    const double support = effective_support();
    for (double x : sorted_x) {
        if (x > prev) {
            const double hi = std::min(x, support);
            if (hi > prev)
                acc += integrate_value([this](double u) { return continuous(u); }, prev,
                                       hi, 1e-13, 1e-11);
            prev = x;
        }
        out.push_back(acc);
    }
    return out;
}

double LinearClosedForm::total_mass(double upper) const {
    return atom_weight() + integrate_value([this](double u) { return continuous(u); },
                                           0.0, std::min(upper, effective_support()),
                                           1e-13, 1e-13);
}

}  // namespace jsl
