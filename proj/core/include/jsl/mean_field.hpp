// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jsl/density_grid.hpp"
#include "jsl/params.hpp"

namespace jsl {

/// State-dependent jumping rate Omega(x_i) on the grid nodes.
struct RateField {
    std::vector<double> values;

    double max() const;
};

/// Omega_i = suffix trapezoid sum of g(x_j - mean) * p_j over x_j >= x_i,
/// with g(u) = cosh^{-n}(u) evaluated in log space. Throws OverflowError if
/// any product is non-finite (possible for n < 0 on wide grids).
RateField compute_omega(const DensityGrid& grid, double n, double mean);

/// Gain integral K(x) = integral over y <= x of source(y)*lambda*exp(-lambda(x-y)),
/// computed by the per-cell exponential recurrence K' = lambda*(source - K),
/// K(x_min) = 0. Exact for piecewise-linear source, second order overall.
std::vector<double> gain_term(const DensityGrid& grid, std::span<const double> source,
                              double lambda);

struct StepOptions {
    /// Test hook: force Omega to a constant rate (bypasses compute_omega),
    /// turning the dynamics into the linear unit-rate equation.
    std::optional<double> fixed_rate;
    /// Abort threshold on |mass - 1|.
    double mass_tolerance = 1e-3;
};

struct StepStats {
    double clamped_mass = 0.0;  // negative mass removed by the positivity clamp
    double mass = 0.0;          // grid mass after the step
    double max_rate = 0.0;      // max Omega seen at the first stage
};

/// One explicit RK4 step of dp/dt = -Omega p + K, recomputing the barycenter,
/// Omega and K at every stage. Requires dt <= 0.2 / max(Omega); negative
/// values are clamped to zero and the clamped mass reported.
/// Throws StabilityError / MassDriftError.
StepStats step(DensityGrid& grid, const ModelParams& params, double dt,
               const StepOptions& options = {});

struct TrajectoryPoint {
    double t = 0.0;
    double barycenter = 0.0;  // includes any accumulated comoving shift
    double variance = 0.0;
    double mass = 0.0;
    double peak = 0.0;
};

struct EvolveOptions {
    double t_end = 1.0;
    double dt = 0.01;
    double snapshot_every = 0.5;      // trajectory cadence
    bool store_profiles = false;      // keep a grid copy at each snapshot
    bool recenter = false;            // comoving window, whole-cell shifts
    StepOptions step_options;
};

struct Evolution {
    std::vector<TrajectoryPoint> trajectory;
    std::vector<DensityGrid> profiles;  // populated when store_profiles
    double total_clamped = 0.0;
    double total_shift = 0.0;           // cumulative comoving shift
};

/// Fixed-dt driver around step() with snapshot recording and optional
/// comoving re-centering. The grid is advanced in place; barycenters in the
/// trajectory are reported in the original (unshifted) frame.
Evolution evolve(DensityGrid& grid, const ModelParams& params,
                 const EvolveOptions& options);

}  // namespace jsl
