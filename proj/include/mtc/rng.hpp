#pragma once

#include <cstdint>

namespace mtc {

// splitmix64. Small, fast, and bit-identical on every platform, which the
// seeded sample streams and the machine report format rely on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t state_;
};

} // namespace mtc
