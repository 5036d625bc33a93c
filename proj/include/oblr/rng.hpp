#pragma once

#include <cstdint>
#include <span>

namespace oblr {

// splitmix64 finalizer; full-period bijective mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t key64(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix64(mix64(mix64(mix64(seed) ^ a) ^ b) ^ c);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double u64_to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Counter-based stream: every draw is a pure function of (seed, step, group, slot),
// so batches are reproducible independent of evaluation order.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t step = 0;

    double uniform(std::uint64_t group, std::uint64_t slot) const {
        return u64_to_unit(key64(seed, step, group, slot));
    }
};

// Inverse-CDF draw from a probability vector. Probabilities are accumulated
// left to right; u lands in the first bucket whose cumulative sum exceeds it.
int draw_categorical(std::span<const double> probs, double u);

} // namespace oblr
