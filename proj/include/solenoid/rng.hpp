#pragma once

#include <cstdint>

namespace solenoid {

// Seeded 64-bit generator with the splitmix state transition written out as
// plain arithmetic, so any other implementation can reproduce the streams
// bit for bit. Used for every randomized sampling in the library; runs with
// the same seed emit identical artifacts.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform index in [0,n). Modulo bias is irrelevant for the sample sizes
    // used here and keeps the stream specification one line long.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }
};

}  // namespace solenoid
