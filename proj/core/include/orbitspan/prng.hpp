#pragma once

#include <cstdint>
#include <vector>

namespace orbitspan {

/// SplitMix64. Self-contained so that seeded runs are bit-identical
/// across standard libraries and platforms (std::uniform_int_distribution
/// is not portable).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-enough integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Integer in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool chance(std::uint64_t numer, std::uint64_t denom) {
        return below(denom) < numer;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

private:
    std::uint64_t state_;
};

} // namespace orbitspan
