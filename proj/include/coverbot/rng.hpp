#pragma once

#include <cstdint>

namespace coverbot {

// Portable 64-bit generators. All randomness in the project flows through
// these so that layouts, nets and whole training runs reproduce bit-for-bit
// from a seed, on any platform. Algorithms are documented in README.md
// (splitmix64 and xoshiro256**, public-domain reference constants).

// Stateless splitmix64 finalizer. Bijective on uint64_t.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256**, state initialized from four splitmix64 outputs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : s_) s = sm.next();
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit mantissa.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform in [0, n). Modulo reduction, chosen for portability; the bias
    // is negligible for the small ranges used here (n <= 21).
    std::uint64_t below(std::uint64_t n) {
        return next_u64() % n;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

// Seed-derivation streams. derive_seed is injective in (stream, index) for a
// fixed master seed as long as index < 2^56, because mix64 is a bijection.
// Training and evaluation therefore can never share an episode seed.
enum class SeedStream : std::uint64_t {
    TrainLayout = 1,
    TrainAgent = 2,
    EvalLayout = 3,
    EvalAgent = 4,
    NetInit = 5,
};

constexpr std::uint64_t derive_seed(std::uint64_t master, SeedStream stream,
                                    std::uint64_t index) {
    return mix64(mix64(master) ^ (static_cast<std::uint64_t>(stream) << 56) ^ index);
}

}  // namespace coverbot
