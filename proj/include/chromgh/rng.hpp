#pragma once

#include <cstdint>

namespace chromgh {

// SplitMix64: a 64-bit counter passed through a fixed finalizer. Small,
// seedable and identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(state_ += 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n); the modulo bias is negligible for the tiny n used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Generator for trial i of a run: independent of how many trials ran before.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) { return SplitMix64(SplitMix64::mix(seed ^ trial)); }

}  // namespace chromgh
