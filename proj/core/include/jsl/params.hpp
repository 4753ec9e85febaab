// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

namespace jsl {

/// Parameters of the jump dynamics: jump lengths are Exp(lambda), the
/// modulation weight is g(u) = cosh^{-n}(u), and base_rate scales the
/// jumping intensity (unity in the reference dynamics).
struct ModelParams {
    double lambda = 1.0;    // jump-length rate, 1/length
    double n = 0.0;         // barycentric modulation exponent
    double base_rate = 1.0; // jump intensity scale, 1/time

    void validate() const {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("ModelParams: lambda must be finite and > 0");
        if (!std::isfinite(n))
            throw std::invalid_argument("ModelParams: n must be finite");
        if (!(base_rate > 0.0) || !std::isfinite(base_rate))
            throw std::invalid_argument("ModelParams: base_rate must be finite and > 0");
    }

    /// True iff the parameters sit on the line m = lambda = 2 - n along which
    /// the stationary traveling profile exists.
    bool soliton_constrained() const {
        return lambda > 0.0 && std::abs(lambda - (2.0 - n)) < 1e-12;
    }

    /// Parameters on the constraint line for a given profile exponent m.
    static ModelParams soliton(double m) {
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("ModelParams::soliton: m must be finite and > 0");
        return ModelParams{m, 2.0 - m, 1.0};
    }
};

}  // namespace jsl
