// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace jsl {

/// Normalization constant C_m = gamma_ratio_half(m)/sqrt(pi) making
/// C_m * cosh^{-m} a unit-mass density. Throws std::invalid_argument for
/// m <= 0.
double soliton_normalization(double m);

/// Stationary traveling density C_m * cosh^{-m}(xi), evaluated in log space
/// so large m*|xi| underflows gracefully instead of overflowing cosh.
double soliton_density(double xi, double m);

/// The two velocity constants attached to the profile family.
///
/// `paper` is the profile constant C_m read as a velocity. `derived` = C_m/m
/// is what the traveling-wave first integral and the barycenter-drift
/// identity V = (1/lambda) * integral(Omega * p) give; the two coincide only
/// at m = 1. Everything downstream reports both and measures which one the
/// dynamics selects.
struct SolitonVelocity {
    double derived;
    double paper;
};
SolitonVelocity soliton_velocity(double m);

/// Rate field along the stationary profile under the constraint n = 2 - m:
/// Omega(xi) = C_m * (1 - tanh(xi)), the closed form of the suffix integral
/// of g * p. Nonincreasing, bounded in [0, 2 C_m].
double soliton_omega(double xi, double m);

/// Cumulative distribution of the profile, integral from -inf to xi.
double soliton_cdf(double xi, double m);

/// The stationary profile with its derived constants, validated on
/// construction (normalization cross-checked by quadrature).
struct SolitonProfile {
    double m;
    double c_m;
    double v_derived;
    double v_paper;

    static SolitonProfile make(double m);

    double density(double xi) const;
    double omega(double xi) const;
};

}  // namespace jsl
