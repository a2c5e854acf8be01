#pragma once

#include <cstdint>

namespace bicliq {

// splitmix64: fixed, portable 64-bit generator. Every seeded feature of the
// library (instance generators, random edge-choice strategies) draws from
// this so that identical seeds reproduce identical results on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // uniform in [0, 1); exact 53-bit mantissa conversion
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace bicliq
