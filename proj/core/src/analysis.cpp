// SPDX-License-Identifier: Apache-2.0
#include "jsl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jsl/errors.hpp"
#include "jsl/initial_density.hpp"
#include "jsl/parallel.hpp"
#include "jsl/special_functions.hpp"

namespace jsl {

double stationary_residual(const DensityGrid& profile, double V,
                           const ModelParams& params) {
    params.validate();
    const int n_nodes = profile.size();
    if (n_nodes < 5)
        throw std::invalid_argument("stationary_residual: grid too small");
    const double mass = profile.mass();
    if (!(mass > 0.0)) return 0.0;  // zero profile solves the equation trivially

    const double mean = profile.moment1() / mass;
    if (std::abs(mean) >= profile.dx)
        throw NumericalError("stationary_residual: profile is not centered");

    const RateField omega = compute_omega(profile, params.n, mean);
    const auto& p = profile.values;
    const double dx = profile.dx;

    double sum_sq = 0.0;
    for (int i = 1; i + 1 < n_nodes; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double p_prime = (p[k + 1] - p[k - 1]) / (2.0 * dx);
        const double p_second = (p[k + 1] - 2.0 * p[k] + p[k - 1]) / (dx * dx);
        const double flux_prime = (omega.values[k + 1] * p[k + 1] -
                                   omega.values[k - 1] * p[k - 1]) /
                                  (2.0 * dx);
        const double r = V * (p_second + params.lambda * p_prime) - flux_prime;
        sum_sq += r * r;
    }
    return std::sqrt(dx * sum_sq);
}

double symmetry_defect(const DensityGrid& profile) {
    const double mass = profile.mass();
    if (!(mass > 0.0)) return 0.0;
    const double mean = profile.moment1() / mass;
    double sum = 0.0;
    for (int i = 0; i < profile.size(); ++i)
        sum += (profile.x(i) - mean) * profile.values[static_cast<std::size_t>(i)];
    return std::abs(sum * profile.dx);
}

double skewness(const DensityGrid& profile) {
    const double mass = profile.mass();
    if (!(mass > 0.0)) throw NumericalError("skewness: zero mass");
    const double mean = profile.moment1() / mass;
    double m2 = 0.0, m3 = 0.0;
    for (int i = 0; i < profile.size(); ++i) {
        const double d = profile.x(i) - mean;
        const double w = profile.values[static_cast<std::size_t>(i)];
        m2 += d * d * w;
        m3 += d * d * d * w;
    }
    m2 *= profile.dx / mass;
    m3 *= profile.dx / mass;
    if (!(m2 > 0.0)) throw NumericalError("skewness: zero variance");
    return m3 / std::pow(m2, 1.5);
}

FitReport fit_soliton(const DensityGrid& profile, double rel_threshold) {
    const double peak = profile.peak();
    if (!(peak > 0.0)) throw FitError("fit_soliton: empty profile");
    const double cutoff = rel_threshold * peak;
    const double mass = profile.mass();
    const double center = profile.moment1() / mass;

    // Normal equations for log p = log c - m * log cosh(x - center).
    double s_ww = 0.0, s_w = 0.0, s_wy = 0.0, s_y = 0.0;
    int points = 0;
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < profile.size(); ++i) {
        const double p = profile.values[static_cast<std::size_t>(i)];
        if (p <= cutoff) continue;
        const double w = -log_cosh(profile.x(i) - center);
        const double y = std::log(p);
        s_ww += w * w;
        s_w += w;
        s_wy += w * y;
        s_y += y;
        if (points == 0) lo = profile.x(i);
        hi = profile.x(i);
        ++points;
    }
    if (points < 3) throw FitError("fit_soliton: window too narrow");

    const double count = points;
    const double det = count * s_ww - s_w * s_w;
    // Condition estimate of the 2x2 normal matrix [count, s_w; s_w, s_ww].
    const double trace = count + s_ww;
    const double gap = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));
    const double eig_min = 0.5 * (trace - gap);
    if (!(eig_min > 0.0) || (trace + gap) / (2.0 * eig_min) > 1e8)
        throw FitError("fit_soliton: ill-conditioned fit window");

    FitReport report;
    report.m_hat = (count * s_wy - s_w * s_y) / det;
    const double intercept = (s_y - report.m_hat * s_w) / count;
    report.c_hat = std::exp(intercept);
    report.points = points;
    report.window_lo = lo;
    report.window_hi = hi;

    double ss = 0.0;
    for (int i = 0; i < profile.size(); ++i) {
        const double p = profile.values[static_cast<std::size_t>(i)];
        if (p <= cutoff) continue;
        const double w = -log_cosh(profile.x(i) - center);
        const double r = std::log(p) - (intercept + report.m_hat * w);
        ss += r * r;
    }
    report.rmse = std::sqrt(ss / count);
    return report;
}

FitReport velocity_fit(std::span<const double> times,
                       std::span<const double> barycenters) {
    if (times.size() != barycenters.size())
        throw std::invalid_argument("velocity_fit: misaligned series");
    const auto count = times.size();
    if (count < 10) throw FitError("velocity_fit: need at least 10 points");

    double st = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        st += times[i];
        sb += barycenters[i];
    }
    const double t_mean = st / static_cast<double>(count);
    const double b_mean = sb / static_cast<double>(count);
    double s_tt = 0.0, s_tb = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dt = times[i] - t_mean;
        s_tt += dt * dt;
        s_tb += dt * (barycenters[i] - b_mean);
    }
    if (!(s_tt > 0.0)) throw FitError("velocity_fit: degenerate time axis");

    FitReport report;
    report.v_hat = s_tb / s_tt;
    report.points = static_cast<int>(count);
    report.window_lo = times.front();
    report.window_hi = times.back();

    double ss = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = barycenters[i] - b_mean - report.v_hat * (times[i] - t_mean);
        ss += r * r;
    }
    report.rmse = std::sqrt(ss / static_cast<double>(count));
    if (count > 2)
        report.v_se = std::sqrt(ss / (static_cast<double>(count) - 2.0) / s_tt);
    return report;
}

FitReport velocity_fit(std::span<const TrajectoryPoint> trajectory, double t_from,
                       double t_to) {
    std::vector<double> times, barycenters;
    for (const auto& point : trajectory) {
        if (point.t < t_from || point.t > t_to) continue;
        times.push_back(point.t);
        barycenters.push_back(point.barycenter);
    }
    return velocity_fit(times, barycenters);
}

PhasePoint phase_scan_point(double n, const PhaseScanConfig& config) {
    PhasePoint point;
    point.n = n;
    point.lambda = n < 2.0 ? 2.0 - n : config.lambda_off_constraint;

    ModelParams params{point.lambda, n, 1.0};
    DensityGrid grid = DensityGrid::make(-config.half_width, config.half_width, config.dx);
    const InitialDensity init = InitialDensity::gaussian(0.0, config.init_sigma);
    grid.fill([&](double x) { return init.density(x); });
    grid.normalize();

    EvolveOptions options;
    options.t_end = config.t_end;
    options.dt = config.dt;
    options.snapshot_every = 1.0;
    options.recenter = true;
    Evolution evolution = evolve(grid, params, options);

    // Variance growth: OLS slope over the second half of the run.
    std::vector<double> times, variances;
    for (const auto& p : evolution.trajectory) {
        if (p.t < 0.5 * config.t_end) continue;
        times.push_back(p.t);
        variances.push_back(p.variance);
    }
    point.growth_rate = velocity_fit(times, variances).v_hat;

    auto variance_at = [&](double t) {
        double best = 0.0, gap = 1e300;
        for (const auto& p : evolution.trajectory) {
            const double d = std::abs(p.t - t);
            if (d < gap) {
                gap = d;
                best = p.variance;
            }
        }
        return best;
    };
    point.variance_t10 = variance_at(10.0);
    point.variance_t50 = variance_at(50.0);
    point.mass_drift = evolution.trajectory.back().mass - 1.0;

    try {
        const FitReport fit = fit_soliton(grid);
        point.m_hat = fit.m_hat;
        point.fit_rmse = fit.rmse;
    } catch (const FitError&) {
        point.m_hat = 0.0;
        point.fit_rmse = 1e300;
    }
    point.dispersive = point.growth_rate > config.flag_growth &&
                       (point.fit_rmse > config.flag_rmse || point.m_hat <= 0.0);
    return point;
}

std::vector<PhasePoint> phase_scan(const PhaseScanConfig& config) {
    std::vector<PhasePoint> table(config.n_values.size());
    parallel_for_index(config.n_values.size(), [&](std::size_t i) {
        table[i] = phase_scan_point(config.n_values[i], config);
    });
    return table;
}

}  // namespace jsl
