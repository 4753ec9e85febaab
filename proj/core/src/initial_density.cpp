// SPDX-License-Identifier: Apache-2.0
#include "jsl/initial_density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jsl {

namespace {
constexpr double kSqrtTwoPi = 2.50662827463100050242;
}

InitialDensity InitialDensity::delta(double a) {
    InitialDensity f;
    f.kind_ = Delta{a};
    return f;
}

InitialDensity InitialDensity::uniform(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("InitialDensity::uniform: need b > a");
    InitialDensity f;
    f.kind_ = Uniform{a, b};
    return f;
}

InitialDensity InitialDensity::gaussian(double mu, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("InitialDensity::gaussian: need sigma > 0");
    InitialDensity f;
    f.kind_ = Gaussian{mu, sigma};
    return f;
}

InitialDensity InitialDensity::table(double x0, double dx, std::vector<double> values) {
    if (!(dx > 0.0) || values.size() < 2)
        throw std::invalid_argument("InitialDensity::table: need dx > 0 and >= 2 values");
    double mass = 0.0;
    for (double v : values) {
        if (v < 0.0)
            throw std::invalid_argument("InitialDensity::table: negative density value");
        mass += v * dx;
    }
    if (!(mass > 0.0)) throw std::invalid_argument("InitialDensity::table: zero mass");

    Table t{x0, dx, std::move(values), {}};
    for (double& v : t.values) v /= mass;
    t.cdf.resize(t.values.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        acc += t.values[i] * dx;
        t.cdf[i] = acc;
    }
    InitialDensity f;
    f.kind_ = std::move(t);
    return f;
}

bool InitialDensity::is_delta() const { return std::holds_alternative<Delta>(kind_); }

double InitialDensity::delta_location() const { return std::get<Delta>(kind_).a; }

double InitialDensity::density(double x) const {
    if (const auto* u = std::get_if<Uniform>(&kind_))
        return (x >= u->a && x <= u->b) ? 1.0 / (u->b - u->a) : 0.0;
    if (const auto* g = std::get_if<Gaussian>(&kind_)) {
        const double z = (x - g->mu) / g->sigma;
        return std::exp(-0.5 * z * z) / (g->sigma * kSqrtTwoPi);
    }
    if (const auto* t = std::get_if<Table>(&kind_)) {
        const double pos = (x - t->x0) / t->dx;
        if (pos < 0.0 || pos > static_cast<double>(t->values.size() - 1)) return 0.0;
        const auto i = static_cast<std::size_t>(pos);
        if (i + 1 >= t->values.size()) return t->values.back();
        const double frac = pos - static_cast<double>(i);
        return t->values[i] * (1.0 - frac) + t->values[i + 1] * frac;
    }
    throw std::logic_error("InitialDensity::density: delta has no pointwise density");
}

double InitialDensity::mean() const {
    if (const auto* d = std::get_if<Delta>(&kind_)) return d->a;
    if (const auto* u = std::get_if<Uniform>(&kind_)) return 0.5 * (u->a + u->b);
    if (const auto* g = std::get_if<Gaussian>(&kind_)) return g->mu;
    const auto& t = std::get<Table>(kind_);
    double m = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i)
        m += (t.x0 + static_cast<double>(i) * t.dx) * t.values[i] * t.dx;
    return m;
}

std::pair<double, double> InitialDensity::support() const {
    if (const auto* d = std::get_if<Delta>(&kind_)) return {d->a, d->a};
    if (const auto* u = std::get_if<Uniform>(&kind_)) return {u->a, u->b};
    if (const auto* g = std::get_if<Gaussian>(&kind_))
        return {g->mu - 10.0 * g->sigma, g->mu + 10.0 * g->sigma};
    const auto& t = std::get<Table>(kind_);
    return {t.x0, t.x0 + t.dx * static_cast<double>(t.values.size() - 1)};
}

std::vector<double> InitialDensity::breakpoints() const {
    if (const auto* u = std::get_if<Uniform>(&kind_)) return {u->a, u->b};
    if (const auto* t = std::get_if<Table>(&kind_)) {
        std::vector<double> nodes(t->values.size());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            nodes[i] = t->x0 + static_cast<double>(i) * t->dx;
        return nodes;
    }
    return {};
}

double InitialDensity::sample(Rng& rng) const {
    if (const auto* d = std::get_if<Delta>(&kind_)) return d->a;
    if (const auto* u = std::get_if<Uniform>(&kind_))
        return u->a + (u->b - u->a) * rng.uniform01();
    if (const auto* g = std::get_if<Gaussian>(&kind_))
        return g->mu + g->sigma * rng.normal();
    const auto& t = std::get<Table>(kind_);
    // Inverse CDF with linear interpolation inside the chosen cell.
    const double u = rng.uniform01() * t.cdf.back();
    const auto it = std::lower_bound(t.cdf.begin(), t.cdf.end(), u);
    const auto i = static_cast<std::size_t>(it - t.cdf.begin());
    const double cdf_lo = i == 0 ? 0.0 : t.cdf[i - 1];
    const double cell_mass = t.cdf[i] - cdf_lo;
    const double frac = cell_mass > 0.0 ? (u - cdf_lo) / cell_mass : 0.0;
    return t.x0 + (static_cast<double>(i) + frac - 0.5) * t.dx;
}

}  // namespace jsl
