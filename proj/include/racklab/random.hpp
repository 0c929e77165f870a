// random.hpp
//
// All randomness comes from std::mt19937_64, whose output sequence is fixed
// by the standard. Distributions are derived here from raw 64-bit words
// rather than via <random> distributions, whose algorithms are
// implementation-defined; that keeps seeded results identical across
// standard libraries.
#pragma once

#include <cstdint>
#include <random>

namespace racklab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

/// Seed of the chunk-th independent stream: seed XOR chunk.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t chunk) { return seed ^ chunk; }

}  // namespace racklab
