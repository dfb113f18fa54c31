#pragma once

// SplitMix64 (Steele, Lea, Flood 2014; constants as in Vigna's reference
// splitmix64.c):
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Doubles in [0, 1) take the top 53 bits: (next() >> 11) * 2^-53. Nothing in
// the library uses <random> distributions, whose outputs differ between
// standard library implementations.

#include <cstdint>
#include <string_view>

namespace loewner {

class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
    static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform in [0, 1).
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// The output finalizer on its own; also used to derive stream seeds.
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * kMul1;
        z = (z ^ (z >> 27)) * kMul2;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// FNV-1a over the bytes of a tag, for folding family names into seeds.
constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed of an independent stream keyed by (seed, tag, dim, index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t dim,
                                    std::uint64_t index) noexcept {
    std::uint64_t h = SplitMix64::mix(seed + SplitMix64::kGamma);
    h = SplitMix64::mix(h ^ fnv1a(tag));
    h = SplitMix64::mix(h ^ (dim * SplitMix64::kGamma));
    h = SplitMix64::mix(h ^ (index + 0x632BE59BD9B4E019ULL));
    return h;
}

}  // namespace loewner
