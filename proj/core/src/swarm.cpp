// SPDX-License-Identifier: Apache-2.0
#include "jsl/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jsl/errors.hpp"
#include "jsl/special_functions.hpp"

namespace jsl {

namespace {

double modulation(double u, double n) {
    const double g = n == 0.0 ? 1.0 : sech_pow(u, n);
    if (!std::isfinite(g))
        throw OverflowError("swarm: non-finite modulation weight g(x - xbar)");
    return g;
}

// Strict-suffix sums of g over a sorted position array: tied positions share
// the suffix of the first strictly greater one.
void strict_suffix_sums(std::span<const double> pos_sorted, double xbar, double n,
                        std::vector<double>& strict) {
    const auto n_particles = pos_sorted.size();
    strict.resize(n_particles);
    double plain = 0.0;
    for (std::size_t idx = n_particles; idx-- > 0;) {
        if (idx + 1 == n_particles)
            strict[idx] = 0.0;
        else
            strict[idx] =
                pos_sorted[idx] == pos_sorted[idx + 1] ? strict[idx + 1] : plain;
        plain += modulation(pos_sorted[idx] - xbar, n);
    }
}

}  // namespace

Swarm Swarm::from_density(const ModelParams& params, int n_particles,
                          const InitialDensity& f, std::uint64_t seed) {
    params.validate();
    if (n_particles < 1)
        throw std::invalid_argument("Swarm::from_density: need at least one particle");
    Swarm swarm(params, {}, seed);
    swarm.positions.resize(static_cast<std::size_t>(n_particles));
    for (auto& p : swarm.positions) p = f.sample(swarm.rng);
    return swarm;
}

Swarm Swarm::cold_start(const ModelParams& params, int n_particles,
                        std::uint64_t seed) {
    params.validate();
    if (n_particles < 1)
        throw std::invalid_argument("Swarm::cold_start: need at least one particle");
    Swarm swarm(params, {}, seed);
    swarm.positions.resize(static_cast<std::size_t>(n_particles));
    for (auto& p : swarm.positions) p = 1e-6 * swarm.rng.uniform01();
    return swarm;
}

double Swarm::barycenter() const {
    double sum = 0.0;
    for (double p : positions) sum += p;
    return sum / static_cast<double>(positions.size());
}

std::vector<double> particle_rates(std::span<const double> positions,
                                   const ModelParams& params) {
    params.validate();
    const auto n_particles = positions.size();
    std::vector<double> rates(n_particles, 0.0);
    if (n_particles < 2) return rates;

    double xbar = 0.0;
    for (double p : positions) xbar += p;
    xbar /= static_cast<double>(n_particles);

    std::vector<int> order(n_particles);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return positions[static_cast<std::size_t>(a)] <
               positions[static_cast<std::size_t>(b)];
    });
    std::vector<double> pos_sorted(n_particles);
    for (std::size_t k = 0; k < n_particles; ++k)
        pos_sorted[k] = positions[static_cast<std::size_t>(order[k])];

    std::vector<double> strict;
    strict_suffix_sums(pos_sorted, xbar, params.n, strict);

    const double scale =
        params.base_rate / static_cast<double>(n_particles - 1);
    for (std::size_t k = 0; k < n_particles; ++k)
        rates[static_cast<std::size_t>(order[k])] = strict[k] * scale;
    return rates;
}

std::vector<double> particle_rates(const Swarm& swarm) {
    return particle_rates(swarm.positions, swarm.params);
}

std::vector<double> particle_rates_naive(std::span<const double> positions,
                                         const ModelParams& params) {
    params.validate();
    const auto n_particles = positions.size();
    std::vector<double> rates(n_particles, 0.0);
    if (n_particles < 2) return rates;

    double xbar = 0.0;
    for (double p : positions) xbar += p;
    xbar /= static_cast<double>(n_particles);

    const double scale = params.base_rate / static_cast<double>(n_particles - 1);
    for (std::size_t i = 0; i < n_particles; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n_particles; ++j)
            if (positions[j] > positions[i]) sum += modulation(positions[j] - xbar, params.n);
        rates[i] = sum * scale;
    }
    return rates;
}

SwarmSimulator::SwarmSimulator(Swarm swarm, std::uint64_t rebuild_every)
    : swarm_(std::move(swarm)), rebuild_every_(std::max<std::uint64_t>(1, rebuild_every)) {
    swarm_.params.validate();
    full_rebuild();
}

void SwarmSimulator::full_rebuild() {
    const auto n_particles = swarm_.positions.size();
    const double stale_sum = pos_sum_;
    order_.resize(n_particles);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
        return swarm_.positions[static_cast<std::size_t>(a)] <
               swarm_.positions[static_cast<std::size_t>(b)];
    });
    rank_.resize(n_particles);
    pos_sorted_.resize(n_particles);
    pos_sum_ = 0.0;
    has_ties_ = false;
    for (std::size_t k = 0; k < n_particles; ++k) {
        const auto id = static_cast<std::size_t>(order_[k]);
        rank_[id] = static_cast<int>(k);
        pos_sorted_[k] = swarm_.positions[id];
        pos_sum_ += pos_sorted_[k];
        if (k > 0 && pos_sorted_[k] == pos_sorted_[k - 1]) has_ties_ = true;
    }
    if (swarm_.event_count > 0 && pos_sum_ != 0.0)
        last_rebuild_drift_ = std::abs(stale_sum - pos_sum_) / std::abs(pos_sum_);
    rates_valid_ = false;
}

void SwarmSimulator::compute_sorted_rates() {
    const auto n_particles = pos_sorted_.size();
    if (n_particles < 2) {
        total_rate_ = 0.0;
        cum_.assign(n_particles, 0.0);
        rates_valid_ = true;
        return;
    }
    const double base = swarm_.params.base_rate;
    const auto count = static_cast<double>(n_particles);

    if (swarm_.params.n == 0.0 && !has_ties_) {
        // Rates depend on ranks alone: rate of sorted k is
        // base * (N-1-k)/(N-1); no arrays needed.
        total_rate_ = 0.5 * base * count;
        rates_valid_ = true;
        return;
    }

    const double xbar = pos_sum_ / count;
    strict_suffix_sums(pos_sorted_, xbar, swarm_.params.n, strict_);

    cum_.resize(n_particles);
    const double scale = base / (count - 1.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < n_particles; ++k) {
        acc += strict_[k] * scale;
        cum_[k] = acc;
    }
    total_rate_ = acc;
    rates_valid_ = true;
}

std::vector<double> SwarmSimulator::rates() {
    const auto n_particles = pos_sorted_.size();
    std::vector<double> out(n_particles, 0.0);
    if (n_particles < 2) return out;
    const double xbar = pos_sum_ / static_cast<double>(n_particles);
    std::vector<double> strict;
    strict_suffix_sums(pos_sorted_, xbar, swarm_.params.n, strict);
    const double scale =
        swarm_.params.base_rate / static_cast<double>(n_particles - 1);
    for (std::size_t k = 0; k < n_particles; ++k)
        out[static_cast<std::size_t>(order_[k])] = strict[k] * scale;
    return out;
}

double SwarmSimulator::total_rate() {
    if (!rates_valid_) compute_sorted_rates();
    return total_rate_;
}

int SwarmSimulator::select_sorted_index(double target) const {
    const auto n_particles = pos_sorted_.size();
    if (swarm_.params.n == 0.0 && !has_ties_) {
        // Invert the rank-weight cumulative W(k) = k(2N-1-k)/2 analytically,
        // then fix up by direct comparison (W is integer-valued and exact in
        // doubles for any workable N).
        const double count = static_cast<double>(n_particles);
        const double y =
            target * (count - 1.0) / swarm_.params.base_rate;
        auto cumulative = [count](double k) { return 0.5 * k * (2.0 * count - 1.0 - k); };
        const double b = 2.0 * count - 1.0;
        const double disc = std::max(0.0, b * b - 8.0 * y);
        auto k = static_cast<long>(std::floor(0.5 * (b - std::sqrt(disc))));
        k = std::clamp<long>(k, 0, static_cast<long>(n_particles) - 2);
        while (k + 1 <= static_cast<long>(n_particles) - 1 &&
               cumulative(static_cast<double>(k + 1)) <= y)
            ++k;
        while (k > 0 && cumulative(static_cast<double>(k)) > y) --k;
        return static_cast<int>(k);
    }
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    return static_cast<int>(std::min<std::ptrdiff_t>(
        it - cum_.begin(), static_cast<std::ptrdiff_t>(n_particles) - 1));
}

std::optional<SwarmEvent> SwarmSimulator::prepare() {
    if (!rates_valid_) compute_sorted_rates();
    if (!(total_rate_ > 0.0)) return std::nullopt;

    SwarmEvent event;
    event.dt = swarm_.rng.exponential(total_rate_);
    const double target = swarm_.rng.uniform01() * total_rate_;
    event.particle = order_[static_cast<std::size_t>(select_sorted_index(target))];
    event.jump = swarm_.rng.exponential(swarm_.params.lambda);
    return event;
}

void SwarmSimulator::move_sorted(int sorted_index, double new_position) {
    const auto n_particles = static_cast<int>(pos_sorted_.size());
    // Insertion point among the entries to the right (moves are rightward).
    int lo = sorted_index + 1, hi = n_particles;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (pos_sorted_[static_cast<std::size_t>(mid)] <= new_position)
            lo = mid + 1;
        else
            hi = mid;
    }
    const int dest = lo - 1;
    const int id = order_[static_cast<std::size_t>(sorted_index)];
    for (int i = sorted_index; i < dest; ++i) {
        pos_sorted_[static_cast<std::size_t>(i)] =
            pos_sorted_[static_cast<std::size_t>(i + 1)];
        order_[static_cast<std::size_t>(i)] = order_[static_cast<std::size_t>(i + 1)];
        rank_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    }
    pos_sorted_[static_cast<std::size_t>(dest)] = new_position;
    order_[static_cast<std::size_t>(dest)] = id;
    rank_[static_cast<std::size_t>(id)] = dest;

    if ((dest > 0 &&
         pos_sorted_[static_cast<std::size_t>(dest - 1)] == new_position) ||
        (dest + 1 < n_particles &&
         pos_sorted_[static_cast<std::size_t>(dest + 1)] == new_position))
        has_ties_ = true;
}

void SwarmSimulator::apply(const SwarmEvent& event) {
    const auto id = static_cast<std::size_t>(event.particle);
    const bool fast = swarm_.params.n == 0.0 && !has_ties_;
    const double new_position = swarm_.positions[id] + event.jump;
    swarm_.positions[id] = new_position;
    pos_sum_ += event.jump;
    move_sorted(rank_[id], new_position);
    swarm_.t += event.dt;
    swarm_.event_count += 1;

    if (swarm_.event_count % rebuild_every_ == 0)
        full_rebuild();
    else if (!(fast && !has_ties_))
        rates_valid_ = false;
}

std::optional<SwarmEvent> SwarmSimulator::step() {
    auto event = prepare();
    if (event) apply(*event);
    return event;
}

double SwarmSimulator::max_relative_rate_error() {
    const std::vector<double> incremental = rates();
    const std::vector<double> fresh = particle_rates(swarm_.positions, swarm_.params);
    double worst = 0.0;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        const double denom = std::max(std::abs(fresh[i]), 1e-300);
        worst = std::max(worst, std::abs(incremental[i] - fresh[i]) / denom);
    }
    return worst;
}

SwarmRunResult run_swarm(SwarmSimulator& sim, const SwarmRunOptions& options) {
    const auto n_particles = sim.swarm().positions.size();
    SwarmRunResult result;

    // All statistics run over the rank-ordered view so that results are
    // bit-identical under particle relabeling.
    auto sorted_mean = [&] {
        double sum = 0.0;
        for (double p : sim.sorted_positions()) sum += p;
        return sum / static_cast<double>(n_particles);
    };
    auto record_point = [&](double at) {
        SwarmTrajectoryPoint point;
        point.t = at;
        point.barycenter = sorted_mean();
        double acc = 0.0;
        for (double p : sim.sorted_positions()) {
            const double d = p - point.barycenter;
            acc += d * d;
        }
        point.variance = acc / static_cast<double>(n_particles);
        result.trajectory.push_back(point);
    };
    auto record_hist = [&](double at) {
        SwarmHistogram hist;
        hist.t = at;
        hist.bin_width = 2.0 * options.hist_half_width / options.hist_bins;
        const double center = sorted_mean();
        hist.lo = -options.hist_half_width;
        hist.density.assign(static_cast<std::size_t>(options.hist_bins), 0.0);
        for (double p : sim.sorted_positions()) {
            const double u = p - center;
            const auto bin = static_cast<long>(std::floor((u - hist.lo) / hist.bin_width));
            if (bin >= 0 && bin < options.hist_bins)
                hist.density[static_cast<std::size_t>(bin)] += 1.0;
        }
        const double norm = static_cast<double>(n_particles) * hist.bin_width;
        for (double& d : hist.density) d /= norm;
        result.histograms.push_back(hist);
    };
    auto record_positions = [&](double at) {
        const double center = sorted_mean();
        result.centered_positions.clear();
        result.centered_positions.reserve(n_particles);
        for (double p : sim.sorted_positions())
            result.centered_positions.push_back(p - center);
        result.centered_positions_t = at;
    };

    double next_snap = sim.time() + options.snapshot_every;
    double next_hist =
        options.hist_every > 0.0 ? sim.time() + options.hist_every : options.t_end + 1.0;
    bool positions_pending = options.positions_snapshot_at >= 0.0;

    record_point(sim.time());
    double rate_time_integral = 0.0;

    while (sim.time() < options.t_end) {
        const auto event = sim.prepare();
        if (!event) {
            result.frozen = true;
            while (next_snap <= options.t_end + 1e-12) {
                record_point(next_snap);
                next_snap += options.snapshot_every;
            }
            if (positions_pending) record_positions(options.t_end);
            break;
        }
        const double t_now = sim.time();
        const double t_next = t_now + event->dt;
        const double rate = sim.total_rate();

        const double lo = std::max(t_now, options.measure_from);
        const double hi = std::min(t_next, options.t_end);
        if (hi > lo) rate_time_integral += rate * (hi - lo);

        while (next_snap <= t_next && next_snap <= options.t_end + 1e-12) {
            record_point(next_snap);
            next_snap += options.snapshot_every;
        }
        while (next_hist <= t_next && next_hist <= options.t_end + 1e-12) {
            record_hist(next_hist);
            next_hist += options.hist_every;
        }
        if (positions_pending && options.positions_snapshot_at <= t_next) {
            record_positions(options.positions_snapshot_at);
            positions_pending = false;
        }

        if (t_next >= options.t_end) break;  // state at t_end is the current one
        sim.apply(*event);
    }

    if (positions_pending) record_positions(options.t_end);
    result.events = sim.events();
    const double window = options.t_end - options.measure_from;
    result.mean_rate = window > 0.0
                           ? rate_time_integral /
                                 (static_cast<double>(n_particles) * window)
                           : 0.0;
    return result;
}

}  // namespace jsl
