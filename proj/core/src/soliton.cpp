// SPDX-License-Identifier: Apache-2.0
#include "jsl/soliton.hpp"

#include <cmath>
#include <stdexcept>

#include "jsl/quadrature.hpp"
#include "jsl/special_functions.hpp"

namespace jsl {

namespace {
constexpr double kSqrtPi = 1.77245385090551602730;

void check_m(double m, const char* who) {
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument(std::string(who) + ": m must be finite and > 0");
}

// Integration window wide enough that sech^m has fully underflowed outside.
double tail_cut(double m) { return std::min(1200.0, 800.0 / m + 30.0); }
}  // namespace

double soliton_normalization(double m) {
    check_m(m, "soliton_normalization");
    return gamma_ratio_half(m) / kSqrtPi;
}

double soliton_density(double xi, double m) {
    check_m(m, "soliton_density");
    const double log_c = std::lgamma(0.5 * (m + 1.0)) - std::lgamma(0.5 * m) -
                         std::log(kSqrtPi);
    return std::exp(log_c - m * log_cosh(xi));
}

SolitonVelocity soliton_velocity(double m) {
    check_m(m, "soliton_velocity");
    const double c = soliton_normalization(m);
    return {c / m, c};
}

double soliton_omega(double xi, double m) {
    check_m(m, "soliton_omega");
    return soliton_normalization(m) * (1.0 - std::tanh(xi));
}

double soliton_cdf(double xi, double m) {
    check_m(m, "soliton_cdf");
    if (m == 2.0) return 0.5 * (1.0 + std::tanh(xi));  // exact: integral of sech^2/2
    const double cut = tail_cut(m);
    if (xi <= -cut) return 0.0;
    if (xi >= cut) return 1.0;
    // Integrate over the shorter side for accuracy.
    if (xi <= 0.0)
        return integrate_value([m](double u) { return soliton_density(u, m); }, -cut, xi,
                               1e-12, 1e-12);
    return 1.0 - integrate_value([m](double u) { return soliton_density(u, m); }, xi,
                                 cut, 1e-12, 1e-12);
}

SolitonProfile SolitonProfile::make(double m) {
    check_m(m, "SolitonProfile");
    SolitonProfile profile;
    profile.m = m;
    profile.c_m = soliton_normalization(m);
    const SolitonVelocity v = soliton_velocity(m);
    profile.v_derived = v.derived;
    profile.v_paper = v.paper;

    // The constant must invert the profile mass: C_m = 1 / integral(sech^m).
    const double cut = tail_cut(m);
    const double mass = integrate_value(
        [m](double u) { return soliton_density(u, m); }, -cut, cut, 1e-12, 1e-12);
    if (std::abs(mass - 1.0) > 1e-9)
        throw std::runtime_error("SolitonProfile: normalization check failed");
    return profile;
}

double SolitonProfile::density(double xi) const { return soliton_density(xi, m); }

double SolitonProfile::omega(double xi) const { return soliton_omega(xi, m); }

}  // namespace jsl
