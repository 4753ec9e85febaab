// SPDX-License-Identifier: Apache-2.0
#include "jsl/linear_jump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jsl/parallel.hpp"
#include "jsl/quadrature.hpp"

namespace jsl {

PathSample sample_path(double t_end, const ModelParams& params, Rng& rng) {
    if (!(t_end > 0.0)) throw std::invalid_argument("sample_path: t_end must be > 0");
    params.validate();

    PathSample sample;
    sample.t = t_end;
    double clock = rng.exponential(params.base_rate);
    while (clock <= t_end) {
        sample.position += rng.exponential(params.lambda);
        sample.jump_count += 1;
        clock += rng.exponential(params.base_rate);
    }
    return sample;
}

std::vector<PathSample> sample_ensemble(double t_end, const ModelParams& params,
                                        std::uint64_t master_seed, int n_paths) {
    if (n_paths <= 0) throw std::invalid_argument("sample_ensemble: n_paths must be > 0");
    std::vector<PathSample> samples(static_cast<std::size_t>(n_paths));
    // Each replicate has its own derived stream and output slot, so the
    // ensemble is identical however the work is scheduled.
    parallel_for_index(samples.size(), [&](std::size_t r) {
        Rng rng(derive_seed(master_seed, r));
        samples[r] = sample_path(t_end, params, rng);
    });
    return samples;
}

EmpiricalMixedCdf EmpiricalMixedCdf::from_samples(std::span<const PathSample> samples) {
    std::vector<double> positions;
    positions.reserve(samples.size());
    for (const auto& s : samples) positions.push_back(s.position);
    return from_positions(std::move(positions));
}

EmpiricalMixedCdf EmpiricalMixedCdf::from_positions(std::vector<double> positions) {
    if (positions.empty())
        throw std::invalid_argument("EmpiricalMixedCdf: empty sample set");
    EmpiricalMixedCdf cdf;
    cdf.total = positions.size();
    std::size_t zeros = 0;
    for (double p : positions) {
        if (p < 0.0)
            throw std::invalid_argument(
                "EmpiricalMixedCdf: law lives on [0, inf), got a negative sample");
        if (p == 0.0)
            ++zeros;
        else
            cdf.positives.push_back(p);
    }
    std::sort(cdf.positives.begin(), cdf.positives.end());
    cdf.atom = static_cast<double>(zeros) / static_cast<double>(cdf.total);
    return cdf;
}

double EmpiricalMixedCdf::value(double x) const {
    if (x < 0.0) return 0.0;
    const auto it = std::upper_bound(positives.begin(), positives.end(), x);
    return atom + static_cast<double>(it - positives.begin()) /
                      static_cast<double>(total);
}

double EmpiricalMixedCdf::value_left(double x) const {
    if (x <= 0.0) return 0.0;
    const auto it = std::lower_bound(positives.begin(), positives.end(), x);
    return atom + static_cast<double>(it - positives.begin()) /
                      static_cast<double>(total);
}

double ks_distance(const EmpiricalMixedCdf& empirical,
                   const std::function<double(double)>& exact_cdf) {
    return ks_distance(empirical, exact_cdf, exact_cdf);
}

double ks_distance(const EmpiricalMixedCdf& empirical,
                   const std::function<double(double)>& exact_cdf,
                   const std::function<double(double)>& exact_cdf_left) {
    double sup = std::abs(empirical.value(0.0) - exact_cdf(0.0));
    for (double x : empirical.positives) {
        sup = std::max(sup, std::abs(empirical.value(x) - exact_cdf(x)));
        sup = std::max(sup, std::abs(empirical.value_left(x) - exact_cdf_left(x)));
    }
    return sup;
}

double ks_distance(const EmpiricalMixedCdf& empirical, double exact_atom,
                   std::span<const double> exact_cdf_at_positives) {
    if (exact_cdf_at_positives.size() != empirical.positives.size())
        throw std::invalid_argument("ks_distance: misaligned exact CDF values");
    double sup = std::abs(empirical.value(0.0) - exact_atom);
    for (std::size_t i = 0; i < empirical.positives.size(); ++i) {
        const double x = empirical.positives[i];
        const double exact = exact_cdf_at_positives[i];
        sup = std::max(sup, std::abs(empirical.value(x) - exact));
        sup = std::max(sup, std::abs(empirical.value_left(x) - exact));
    }
    return sup;
}

GeneralDensityValue general_init_density(const InitialDensity& f, double x, double t,
                                         const ModelParams& params) {
    if (!(t > 0.0)) throw std::invalid_argument("general_init_density: t must be > 0");
    params.validate();
    const double lambda = params.lambda;
    const LinearClosedForm kernel{lambda, t};

    GeneralDensityValue out;
    if (f.is_delta()) {
        // Convolution with a delta translates the kernel.
        const double a = f.delta_location();
        out.atom_weight = kernel.atom_weight();
        out.atom_location = a;
        out.continuous = x >= a ? kernel.continuous(x - a) : 0.0;
        return out;
    }

    // P_f(x) = exp(-t) f(x) + integral over u >= 0 of kernel(u) f(x - u).
    // The u-integral is split at the images of f's breakpoints, where the
    // integrand is non-smooth and a single adaptive pass misjudges its error.
    const auto [lo, hi] = f.support();
    const double u_max = std::min(x - lo, kernel.effective_support());
    double convolution = 0.0;
    if (u_max > 0.0) {
        const double u_min = std::max(0.0, x - hi);
        if (u_max > u_min) {
            std::vector<double> cuts{u_min};
            for (double b : f.breakpoints()) {
                const double u = x - b;
                if (u > u_min && u < u_max) cuts.push_back(u);
            }
            cuts.push_back(u_max);
            std::sort(cuts.begin(), cuts.end());
            const auto integrand = [&](double u) {
                return kernel.continuous(u) * f.density(x - u);
            };
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                convolution +=
                    integrate_value(integrand, cuts[i], cuts[i + 1], 1e-12, 1e-10);
        }
    }
    out.continuous = kernel.atom_weight() * f.density(x) + convolution;
    return out;
}

}  // namespace jsl
