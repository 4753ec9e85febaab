// SPDX-License-Identifier: Apache-2.0
#include "jsl/density_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jsl/errors.hpp"

namespace jsl {

double DensityGrid::mass() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return dx * sum;
}

double DensityGrid::moment1() const {
    double sum = 0.0;
    for (int i = 0; i < size(); ++i) sum += x(i) * values[static_cast<std::size_t>(i)];
    return dx * sum;
}

double DensityGrid::variance() const {
    const double m0 = mass();
    if (!(m0 > 0.0)) throw NumericalError("DensityGrid::variance: zero mass");
    const double mean = moment1() / m0;
    double sum = 0.0;
    for (int i = 0; i < size(); ++i) {
        const double d = x(i) - mean;
        sum += d * d * values[static_cast<std::size_t>(i)];
    }
    return dx * sum / m0;
}

double DensityGrid::peak() const {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

std::vector<double> DensityGrid::cdf() const {
    std::vector<double> out(values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i] * dx;
        out[i] = acc;
    }
    return out;
}

DensityGrid DensityGrid::make(double lo, double hi, double dx) {
    if (!(dx > 0.0) || !(hi > lo))
        throw std::invalid_argument("DensityGrid::make: need hi > lo and dx > 0");
    DensityGrid grid;
    grid.x_min = lo;
    grid.dx = dx;
    grid.values.assign(static_cast<std::size_t>(std::round((hi - lo) / dx)) + 1, 0.0);
    return grid;
}

void DensityGrid::fill(const std::function<double(double)>& density) {
    for (int i = 0; i < size(); ++i)
        values[static_cast<std::size_t>(i)] = density(x(i));
}

void DensityGrid::normalize() {
    const double m = mass();
    if (!(m > 0.0)) throw NumericalError("DensityGrid::normalize: nonpositive mass");
    for (double& v : values) v /= m;
}

void DensityGrid::shift_cells(int cells) {
    if (cells == 0) return;
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    if (cells > 0) {
        const auto k = std::min<std::ptrdiff_t>(cells, n);
        std::move(values.begin() + k, values.end(), values.begin());
        std::fill(values.end() - k, values.end(), 0.0);
    } else {
        const auto k = std::min<std::ptrdiff_t>(-cells, n);
        std::move_backward(values.begin(), values.end() - k, values.end());
        std::fill(values.begin(), values.begin() + k, 0.0);
    }
}

double grid_barycenter(const DensityGrid& grid) {
    const double m = grid.mass();
    if (!(m > 0.5))
        throw NumericalError("grid_barycenter: grid mass below 0.5, degenerate truncation");
    return grid.moment1() / m;
}

}  // namespace jsl
