// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "jsl/density_grid.hpp"
#include "jsl/mean_field.hpp"
#include "jsl/params.hpp"

namespace jsl {

struct FitReport {
    double m_hat = 0.0;
    double c_hat = 0.0;
    double rmse = 0.0;
    double v_hat = 0.0;
    double v_se = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    int points = 0;
};

/// L2 norm (function norm, sqrt(dx*sum r^2)) of the traveling-wave equation
/// residual V*(p'' + lambda*p') - d/dxi(Omega*p) over the grid interior,
/// with central differences and Omega from compute_omega. The profile must
/// be centered (|barycenter| < dx).
double stationary_residual(const DensityGrid& profile, double V,
                           const ModelParams& params);

/// First moment of the profile in its own barycentric frame,
/// |integral (x - xbar) p dx|; ~0 up to quadrature rounding for any density,
/// exercising the evenness identity the traveling frame relies on.
double symmetry_defect(const DensityGrid& profile);

/// Standardized third central moment; the asymmetry diagnostic that actually
/// separates even profiles from skewed ones.
double skewness(const DensityGrid& profile);

/// Least squares of log p against (1, -log cosh(x - xbar)) over the window
/// where p > rel_threshold * max(p). Returns m_hat (slope), c_hat
/// (exp intercept) and the rmse of the log fit.
/// Throws FitError when the window is too narrow or the normal equations are
/// ill-conditioned (condition number > 1e8).
FitReport fit_soliton(const DensityGrid& profile, double rel_threshold = 1e-3);

/// Ordinary least squares slope of barycenter vs t with its standard error.
/// Throws FitError with fewer than 10 points.
FitReport velocity_fit(std::span<const double> times,
                       std::span<const double> barycenters);
FitReport velocity_fit(std::span<const TrajectoryPoint> trajectory, double t_from,
                       double t_to);

/// One row of the cooperative-behavior scan.
struct PhasePoint {
    double n = 0.0;
    double lambda = 0.0;
    double growth_rate = 0.0;   // OLS slope of variance vs t, second half
    double fit_rmse = 0.0;
    double m_hat = 0.0;
    bool dispersive = false;
    double variance_t10 = 0.0;
    double variance_t50 = 0.0;
    double mass_drift = 0.0;
};

struct PhaseScanConfig {
    std::vector<double> n_values;
    double lambda_off_constraint = 0.5;  // used when n >= 2 (no constraint line)
    double t_end = 120.0;
    double dt = 0.05;
    double dx = 0.05;
    double half_width = 35.0;
    double init_sigma = 1.5;  // gaussian(0, sigma) initial data, identical per point
    // Dispersive flag: still drifting AND the profile has left the cosh^{-m}
    // family. Slowly converging table-top points (small m) pass the rmse
    // clause long before their variance growth fully dies out.
    double flag_growth = 5e-4;
    double flag_rmse = 5e-3;
};

/// Evolve each n from the same gaussian initial condition: lambda = 2 - n on
/// the constraint line for n < 2, lambda_off_constraint otherwise. A point is
/// flagged dispersive when the variance keeps growing and the final profile
/// no longer fits the cosh^{-m} family.
std::vector<PhasePoint> phase_scan(const PhaseScanConfig& config);

/// Single scan point (exposed so scan points can run concurrently).
PhasePoint phase_scan_point(double n, const PhaseScanConfig& config);

}  // namespace jsl
