// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace jsl {

// Self-contained generators so that streams are bit-identical across
// platforms and standard-library versions. std::mt19937 is portable but the
// std distributions are not; everything here is pinned down to the ulp.

/// SplitMix64 (Steele, Lea, Flood 2014). Used to expand seeds and to derive
/// independent per-replicate seeds from a master seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Replicate r draws from an independent stream seeded by
/// splitmix(master XOR (r+1)*golden); streams for distinct r never collide
/// in practice and are order-independent, so parallel replication is
/// reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replicate) {
    SplitMix64 sm(master ^ ((replicate + 1) * 0x9e3779b97f4a7c15ULL));
    sm.next();
    return sm.next();
}

/// xoshiro256++ (Blackman, Vigna 2019). Main generator for all simulation
/// randomness.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log argument.
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Exponential with the given rate (mean 1/rate).
    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    /// Standard normal via Box-Muller (no rejection, no cached state).
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace jsl
