#pragma once

#include <cstdint>

namespace combpfaff {

// SplitMix64 (Steele, Lea, Vigna). The constants below fully determine the
// stream, so a seed reproduces the same instances on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound must be positive. Modulo bias
    // is irrelevant at the tiny bounds used for instance generation.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int int_in(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace combpfaff
