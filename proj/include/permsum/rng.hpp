#pragma once

#include <cstdint>

namespace permsum {

// SplitMix64 (Steele, Lea & Flood 2014). Chosen over std::mt19937 because the
// algorithm fits in a dozen lines, so sequences are reproducible bit for bit on
// any platform, and substreams can be derived by hashing (seed, index) pairs.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection: discard the sliver below
    // 2^64 mod bound so every residue class is equally likely.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform on [0,1) with 53 random mantissa bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Deterministic substream derivation: feed (seed, index) through one extra
// mixing round so parallel or per-draw streams never overlap by construction
// and results do not depend on scheduling.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    splitmix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return g.next();
}

} // namespace permsum
