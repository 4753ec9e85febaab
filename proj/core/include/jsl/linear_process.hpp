// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace jsl {

/// Transition density of the unit-rate right-jump process with Exp(lambda)
/// jumps started at the origin: a point mass exp(-t) at x = 0 plus the
/// continuous part exp(-t - lambda*x) * sqrt(lambda*t/x) * I1(2*sqrt(lambda*x*t)).
struct LinearDensityValue {
    double atom_weight;  // mass sitting exactly at 0
    double continuous;   // density value at the queried x
};

/// Closed-form density at (x, t). The continuous part uses the scaled Bessel
/// route, exp(z - t - lambda*x) * i1e with z = 2*sqrt(lambda*x*t); the
/// combined exponent is -(sqrt(lambda*x) - sqrt(t))^2 <= 0, so no range of
/// (x, t, lambda) overflows. At x = 0 the continuous part takes its limit
/// value exp(-t) * lambda * t.
/// Throws std::invalid_argument for x < 0, t <= 0 or lambda <= 0.
LinearDensityValue linear_density(double x, double t, double lambda);

/// Laplace transform of the density: exp(-t + t*lambda/(lambda+s)).
double linear_laplace(double s, double t, double lambda);

/// Long-time diffusive wave approximation
/// (lambda*t)^{1/4} / (2 sqrt(pi) x^{3/4}) * exp(-(sqrt(lambda*x)-sqrt(t))^2).
double linear_asymptotic(double x, double t, double lambda);

/// Evaluator around the closed form: mixed CDF, batch CDF at sorted points,
/// normalization diagnostics.
struct LinearClosedForm {
    double lambda;
    double t;

    double atom_weight() const;
    double continuous(double x) const;

    /// Mixed CDF F(x) = atom + integral of the continuous part over [0, x].
    double cdf(double x) const;

    /// CDF evaluated at an ascending sequence of points, integrating segment
    /// by segment (one pass, no repeated work).
    std::vector<double> cdf_at_sorted(std::span<const double> sorted_x) const;

    /// atom + integral over [0, upper]; equals 1 as upper -> inf.
    double total_mass(double upper) const;

    /// Truncation point beyond which the continuous part is below
    /// ~1e-16 of its peak.
    double effective_support() const;
};

}  // namespace jsl
