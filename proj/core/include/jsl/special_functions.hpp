// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace jsl {

/// log(cosh(x)), stable for any |x| (no overflow past |x| ~ 710).
double log_cosh(double x);

/// cosh(x)^(-m) evaluated as exp(-m*log_cosh(x)); finite for any m*|x| that
/// keeps the exponent above the double underflow threshold, gradual
/// underflow to 0 beyond.
double sech_pow(double x, double m);

/// Gamma((m+1)/2) / Gamma(m/2), the half-step gamma ratio. Computed via
/// log-gamma differences so it survives m in the hundreds.
///
/// Throws std::invalid_argument unless m > 0 and finite.
double gamma_ratio_half(double m);

/// Modified Bessel function of the first kind, order one.
///
/// Power series for z <= 30 (all terms positive, no cancellation),
/// exponentially scaled asymptotic series beyond. Overflows to +inf for
/// z > ~709; use bessel_i1_scaled or bessel_i1_log there.
/// Throws std::invalid_argument for z < 0 or non-finite z.
double bessel_i1(double z);

/// exp(-z) * I1(z); finite for all z >= 0.
double bessel_i1_scaled(double z);

/// log(I1(z)); -inf at z = 0. The exponent-and-mantissa route for z > 700.
double bessel_i1_log(double z);

}  // namespace jsl
