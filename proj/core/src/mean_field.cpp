// SPDX-License-Identifier: Apache-2.0
#include "jsl/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jsl/errors.hpp"
#include "jsl/special_functions.hpp"

namespace jsl {

namespace {

// Suffix trapezoid of g(x - mean) * p with g = cosh^{-n}, log-space products.
std::vector<double> omega_suffix(const DensityGrid& grid, std::span<const double> p,
                                 double n, double mean) {
    const auto n_nodes = p.size();
    std::vector<double> omega(n_nodes, 0.0);
    double prev_term = 0.0;
    double acc = 0.0;
    for (std::size_t idx = n_nodes; idx-- > 0;) {
        const double u = grid.x(static_cast<int>(idx)) - mean;
        const double term =
            p[idx] == 0.0 ? 0.0 : (n == 0.0 ? p[idx] : sech_pow(u, n) * p[idx]);
        if (!std::isfinite(term))
            throw OverflowError("compute_omega: non-finite g*p product");
        if (idx + 1 < n_nodes) acc += 0.5 * grid.dx * (term + prev_term);
        omega[idx] = acc;
        prev_term = term;
    }
    return omega;
}

double stage_mean(const DensityGrid& grid, std::span<const double> p) {
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        m0 += p[i];
        m1 += grid.x(static_cast<int>(i)) * p[i];
    }
    if (!(m0 > 0.0)) throw NumericalError("mean_field: zero-mass stage");
    return m1 / m0;
}

struct Rhs {
    std::vector<double> dpdt;
    double max_rate = 0.0;
};

// dp/dt = -base_rate*Omega*p + gain(base_rate*Omega*p); Omega rebuilt from
// the stage values.
Rhs evaluate_rhs(const DensityGrid& grid, std::span<const double> p,
                 const ModelParams& params, const StepOptions& options) {
    const auto n_nodes = p.size();
    std::vector<double> omega;
    if (options.fixed_rate) {
        omega.assign(n_nodes, *options.fixed_rate);
    } else {
        omega = omega_suffix(grid, p, params.n, stage_mean(grid, p));
    }

    Rhs rhs;
    rhs.max_rate =
        omega.empty() ? 0.0 : *std::max_element(omega.begin(), omega.end());

    const double a = params.lambda * grid.dx;
    const double decay = std::exp(-a);
    const double c0 = 1.0 - decay;
    const double c1 = c0 - (1.0 - decay - a * decay) / a;

    rhs.dpdt.resize(n_nodes);
    double gain_prev = 0.0;
    double source_prev = omega[0] * p[0] * params.base_rate;
    rhs.dpdt[0] = -source_prev;
    for (std::size_t i = 1; i < n_nodes; ++i) {
        const double source = omega[i] * p[i] * params.base_rate;
        const double gain =
            gain_prev * decay + source_prev * c0 + (source - source_prev) * c1;
        rhs.dpdt[i] = gain - source;
        gain_prev = gain;
        source_prev = source;
    }
    return rhs;
}

}  // namespace

double RateField::max() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

RateField compute_omega(const DensityGrid& grid, double n, double mean) {
    return RateField{omega_suffix(grid, grid.values, n, mean)};
}

std::vector<double> gain_term(const DensityGrid& grid, std::span<const double> source,
                              double lambda) {
    if (source.size() != grid.values.size())
        throw std::invalid_argument("gain_term: source not aligned with grid");
    if (!(lambda > 0.0)) throw std::invalid_argument("gain_term: lambda must be > 0");

    const double a = lambda * grid.dx;
    const double decay = std::exp(-a);
    const double c0 = 1.0 - decay;
    const double c1 = c0 - (1.0 - decay - a * decay) / a;

    std::vector<double> gain(source.size(), 0.0);
    for (std::size_t i = 1; i < source.size(); ++i)
        gain[i] = gain[i - 1] * decay + source[i - 1] * c0 +
                  (source[i] - source[i - 1]) * c1;
    return gain;
}

StepStats step(DensityGrid& grid, const ModelParams& params, double dt,
               const StepOptions& options) {
    params.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");

    const auto n_nodes = grid.values.size();
    const Rhs k1 = evaluate_rhs(grid, grid.values, params, options);

    const double rate_cap = k1.max_rate * params.base_rate;
    if (rate_cap > 0.0 && dt > 0.2 / rate_cap)
        throw StabilityError("step: dt exceeds stability bound 0.2/max(Omega)");

    std::vector<double> stage(n_nodes);
    auto advance = [&](const std::vector<double>& slope, double factor) {
        for (std::size_t i = 0; i < n_nodes; ++i)
            stage[i] = grid.values[i] + factor * slope[i];
    };

    advance(k1.dpdt, 0.5 * dt);
    const Rhs k2 = evaluate_rhs(grid, stage, params, options);
    advance(k2.dpdt, 0.5 * dt);
    const Rhs k3 = evaluate_rhs(grid, stage, params, options);
    advance(k3.dpdt, dt);
    const Rhs k4 = evaluate_rhs(grid, stage, params, options);

    StepStats stats;
    stats.max_rate = rate_cap;
    const double sixth = dt / 6.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
        double v = grid.values[i] + sixth * (k1.dpdt[i] + 2.0 * k2.dpdt[i] +
                                             2.0 * k3.dpdt[i] + k4.dpdt[i]);
        if (v < 0.0) {
            stats.clamped_mass -= v * grid.dx;
            v = 0.0;
        }
        grid.values[i] = v;
    }
    grid.t += dt;

    stats.mass = grid.mass();
    if (std::abs(stats.mass - 1.0) > options.mass_tolerance)
        throw MassDriftError("step: grid mass drifted beyond tolerance");
    return stats;
}

Evolution evolve(DensityGrid& grid, const ModelParams& params,
                 const EvolveOptions& options) {
    if (!(options.t_end > grid.t)) throw std::invalid_argument("evolve: t_end <= t");

    Evolution evolution;
    const double t0 = grid.t;
    const auto total_steps =
        static_cast<long>(std::ceil((options.t_end - t0) / options.dt - 1e-12));
    const long snap_stride = std::max<long>(
        1, static_cast<long>(std::round(options.snapshot_every / options.dt)));
    const double window_half = 0.5 * (grid.x_max() - grid.x_min);

    auto record = [&]() {
        TrajectoryPoint point;
        point.t = grid.t;
        point.mass = grid.mass();
        point.barycenter = grid_barycenter(grid) + evolution.total_shift;
        point.variance = grid.variance();
        point.peak = grid.peak();
        evolution.trajectory.push_back(point);
        if (options.store_profiles) evolution.profiles.push_back(grid);
    };

    record();
    for (long step_index = 0; step_index < total_steps; ++step_index) {
        const StepStats stats = step(grid, params, options.dt, options.step_options);
        evolution.total_clamped += stats.clamped_mass;

        if (options.recenter) {
            const double offset = grid_barycenter(grid) - (grid.x_min + window_half);
            const int cells = static_cast<int>(std::round(offset / grid.dx));
            if (cells != 0) {
                grid.shift_cells(cells);
                evolution.total_shift += grid.dx * static_cast<double>(cells);
            }
        }
        if ((step_index + 1) % snap_stride == 0 || step_index + 1 == total_steps)
            record();
    }
    return evolution;
}

}  // namespace jsl
