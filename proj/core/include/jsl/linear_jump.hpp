// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "jsl/initial_density.hpp"
#include "jsl/linear_process.hpp"
#include "jsl/params.hpp"
#include "jsl/rng.hpp"

namespace jsl {

/// End state of one simulated path.
struct PathSample {
    double position = 0.0;
    int jump_count = 0;
    double t = 0.0;
};

/// Exact event-driven sample of the compound Poisson path: a Poisson clock of
/// intensity base_rate on [0, t_end], each event adding an Exp(lambda) jump.
/// Deterministic given the generator state.
PathSample sample_path(double t_end, const ModelParams& params, Rng& rng);

/// n_paths independent paths; replicate r uses derive_seed(master_seed, r),
/// so the ensemble is reproducible and independent of evaluation order.
std::vector<PathSample> sample_ensemble(double t_end, const ModelParams& params,
                                        std::uint64_t master_seed, int n_paths);

/// Empirical mixed CDF: an atom at zero plus a right-continuous step function
/// on the positive samples.
struct EmpiricalMixedCdf {
    double atom = 0.0;               // fraction of samples exactly at 0
    std::vector<double> positives;   // sorted ascending
    std::size_t total = 0;

    static EmpiricalMixedCdf from_samples(std::span<const PathSample> samples);
    static EmpiricalMixedCdf from_positions(std::vector<double> positions);

    double value(double x) const;       // right-continuous F(x)
    double value_left(double x) const;  // left limit F(x-)
};

/// Kolmogorov-Smirnov distance between the empirical mixed CDF and an exact
/// mixed CDF evaluator (right-continuous, atom at 0 allowed). The supremum
/// is scanned at 0 and at every empirical jump point, from both sides; the
/// single-function form assumes the exact law is continuous on (0, inf).
/// Pass exact_cdf_left when the exact law has further atoms.
double ks_distance(const EmpiricalMixedCdf& empirical,
                   const std::function<double(double)>& exact_cdf);
double ks_distance(const EmpiricalMixedCdf& empirical,
                   const std::function<double(double)>& exact_cdf,
                   const std::function<double(double)>& exact_cdf_left);

/// Batch-evaluated variant: exact CDF values aligned with empirical.positives
/// plus the exact atom at 0 (exact continuous elsewhere).
double ks_distance(const EmpiricalMixedCdf& empirical, double exact_atom,
                   std::span<const double> exact_cdf_at_positives);

/// Density of the process started from a general initial density f,
/// P_f(x,t) = exp(-t) f(x) + convolution of the continuous kernel with f.
/// For a delta initial condition the surviving point mass is reported as
/// atom_weight at atom_location; otherwise atom_weight = 0 and the
/// exp(-t) f(x) term is folded into `continuous`.
struct GeneralDensityValue {
    double atom_weight = 0.0;
    double atom_location = 0.0;
    double continuous = 0.0;
};

GeneralDensityValue general_init_density(const InitialDensity& f, double x, double t,
                                         const ModelParams& params);

}  // namespace jsl
