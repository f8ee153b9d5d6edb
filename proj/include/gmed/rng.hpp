#pragma once

#include <cstdint>
#include <random>

namespace gmed {

/// SplitMix64 finalizer. Used to derive independent child seeds so that
/// per-trial streams do not depend on the order trials are executed in.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) noexcept
{
    return mix64(mix64(parent) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine{mix64(seed)}; }

// Stream tags for the sub-streams of one trial.
namespace stream {
inline constexpr std::uint64_t data = 1;
inline constexpr std::uint64_t outliers = 2;
inline constexpr std::uint64_t plan = 3;
inline constexpr std::uint64_t base = 4;
inline constexpr std::uint64_t weights = 5;
} // namespace stream

} // namespace gmed
