#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace exforge {

// splitmix64, used only to expand a 64-bit seed into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** by Blackman & Vigna (public domain). Fixed algorithm so every
// dataset, direction sample and noise draw is reproducible from its seed
// independently of the standard library in use.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0,1) with 53 bits of mantissa.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be > 0; uses rejection to stay unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = max() - max() % n;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller (cosine branch). Two uniforms per draw;
    // no cached state, so interleaved streams stay easy to reason about.
    double normal() {
        double u1 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    // Derive an independent stream, e.g. for a dataset's test split.
    Rng fork(std::uint64_t stream_tag) const {
        std::uint64_t sm = state_[0] ^ (0x632be59bd9b4e019ULL * (stream_tag + 1));
        Rng child(0);
        for (auto& w : child.state_) w = splitmix64(sm);
        return child;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

// Mixes a seed with a stream tag; used to derive per-purpose seeds (weights,
// shuffling, noise) from one user-facing seed without stream collisions.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (tag + 0x51ULL));
    return splitmix64(sm);
}

}  // namespace exforge
