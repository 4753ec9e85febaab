// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace jsl {

/// Worker count: hardware concurrency capped by the JSL_THREADS environment
/// variable when set.
inline unsigned worker_count() {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("JSL_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    return workers;
}

/// Run body(i) for i in [0, count) across workers. Results must be written to
/// pre-sized slots indexed by i so that the outcome is identical regardless
/// of scheduling.
inline void parallel_for_index(std::size_t count,
                               const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace jsl
