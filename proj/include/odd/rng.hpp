#pragma once

#include <cstdint>

namespace odd {

// Counter-based generator: value i of a seeded stream is a pure function of
// (seed, i), so sampling is reproducible across platforms and independent of
// call order. splitmix64 applied to seed + i * golden gamma.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t i) const {
        std::uint64_t z = seed_ + (i + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform01(std::uint64_t i) const {
        return double(bits(i) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
};

} // namespace odd
