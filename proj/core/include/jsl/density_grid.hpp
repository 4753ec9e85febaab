// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace jsl {

/// Discretized probability density on a uniform grid. Mass and moments use
/// the plain dx * sum rule, which coincides with the trapezoid rule for the
/// exponentially decaying profiles this grid carries.
struct DensityGrid {
    double x_min = 0.0;
    double dx = 1.0;
    std::vector<double> values;
    double t = 0.0;

    int size() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x_min + dx * static_cast<double>(i); }
    double x_max() const { return x(size() - 1); }

    double mass() const;
    double moment1() const;          // unnormalized first moment, dx * sum(x*p)
    double variance() const;         // about the barycenter
    double peak() const;

    /// CDF at the node index (prefix sum * dx, right-inclusive).
    std::vector<double> cdf() const;

    /// Uniform grid over [lo, hi] with zero values.
    static DensityGrid make(double lo, double hi, double dx);

    /// Fill from a function of x (does not normalize).
    void fill(const std::function<double(double)>& density);

    /// Scale values so that mass() == 1. Throws on nonpositive mass.
    void normalize();

    /// Shift the window right by whole cells: values move left in the array,
    /// zeros fill the tail, x_min is unchanged (the content moved, the frame
    /// is re-anchored by the caller tracking the cumulative shift).
    void shift_cells(int cells);
};

/// Self-normalized first moment of the grid. Throws NumericalError when the
/// grid holds less than half of the unit mass (degenerate truncation).
double grid_barycenter(const DensityGrid& grid);

}  // namespace jsl
