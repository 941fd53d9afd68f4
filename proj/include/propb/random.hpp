#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace propb {

// SplitMix64 finalizer. Used to derive independent per-trial streams from
// (seed, index) so parallel runs do not depend on scheduling.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index)
{
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 0x5851f42d4c957f2dULL)));
}

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementation so outputs are portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = bound * (std::numeric_limits<std::uint64_t>::max() / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void fisher_yates(std::span<T> items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace propb
