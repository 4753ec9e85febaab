// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "jsl/rng.hpp"

namespace jsl {

/// Initial probability density f for process starts: a point mass, a box, a
/// gaussian, or a tabulated density on a uniform grid.
class InitialDensity {
  public:
    static InitialDensity delta(double a);
    static InitialDensity uniform(double a, double b);
    static InitialDensity gaussian(double mu, double sigma);
    static InitialDensity table(double x0, double dx, std::vector<double> values);

    bool is_delta() const;
    double delta_location() const;  // only valid when is_delta()

    /// Density value at x; throws std::logic_error for the delta kind.
    double density(double x) const;

    double mean() const;

    /// Range outside which the density is zero or negligible (delta: the
    /// point itself; gaussian: +-10 sigma).
    std::pair<double, double> support() const;

    /// Locations where the density is non-smooth (support edges, table
    /// nodes); quadrature against f must split there.
    std::vector<double> breakpoints() const;

    double sample(Rng& rng) const;

  private:
    struct Delta {
        double a;
    };
    struct Uniform {
        double a, b;
    };
    struct Gaussian {
        double mu, sigma;
    };
    struct Table {
        double x0, dx;
        std::vector<double> values;
        std::vector<double> cdf;  // prefix sums * dx, normalized
    };

    std::variant<Delta, Uniform, Gaussian, Table> kind_;
};

}  // namespace jsl
