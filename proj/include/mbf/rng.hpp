#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mbf {

/// splitmix64 finalizer; good avalanche, used for seed mixing and hashing.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Combine a seed with one or more integers into a new seed.
inline uint64_t mix_seed(uint64_t seed) { return mix64(seed); }

template <typename... Rest>
inline uint64_t mix_seed(uint64_t seed, uint64_t next, Rest... rest) {
    return mix_seed(mix64(seed ^ mix64(next)), rest...);
}

/// Named sub-stream derivation: all stage RNGs flow from one top-level seed,
/// so changing one stage's draws does not perturb the others.
inline uint64_t derive_seed(uint64_t seed, std::string_view name) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the stream name
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix_seed(seed, h);
}

/// Deterministic RNG wrapper. The engine sequence is pinned by the standard
/// (mt19937_64) and the uniform mappings below avoid std::distributions whose
/// output is implementation-defined, so draws are reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(mix64(seed)) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be > 0.
    uint64_t uniform_index(uint64_t n) {
        // Rejection sampling to remove modulo bias.
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
        uint64_t x = engine_();
        while (x > limit) x = engine_();
        return x % n;
    }

    /// Standard normal via Box-Muller (deterministic, no cached spare).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mbf
