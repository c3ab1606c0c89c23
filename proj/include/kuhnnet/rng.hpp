#pragma once

#include <cstdint>
#include <vector>

namespace kuhnnet {

// xoshiro256** seeded through splitmix64. Hand-rolled so that seeded scans
// produce the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, m).
    std::uint64_t below(std::uint64_t m) { return next_u64() % m; }

    std::vector<double> uniform_vector(std::size_t len, double lo, double hi) {
        std::vector<double> v(len);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

// Halton point in [0,1)^d with a seed-dependent rotation (Cranley-Patterson).
// Used for low-discrepancy scan sets.
class HaltonSequence {
public:
    HaltonSequence(std::size_t dim, std::uint64_t seed);
    std::vector<double> next();

private:
    std::vector<int> bases_;
    std::vector<double> shifts_;
    std::uint64_t index_ = 0;
};

} // namespace kuhnnet
