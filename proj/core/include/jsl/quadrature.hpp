// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace jsl {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
///
/// Globally adaptive: the worst segment (largest error estimate) is bisected
/// until the summed error estimate falls below max(abs_tol, rel_tol*|I|) or
/// the segment budget is exhausted. Suited to the smooth, exponentially
/// decaying integrands used throughout; not a general-purpose replacement
/// for QUADPACK on singular integrands.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10, double rel_tol = 1e-10,
                           int max_segments = 2000);

/// Convenience wrapper returning just the value (asserts convergence only via
/// the caller's tolerance choices; inspect integrate() when diagnostics matter).
double integrate_value(const std::function<double(double)>& f, double a, double b,
                       double abs_tol = 1e-10, double rel_tol = 1e-10);

}  // namespace jsl
