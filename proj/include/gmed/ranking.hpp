#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gmed/metric.hpp"

namespace gmed {

/// A full ranking of m items, stored as a permutation of 1..m.
class Ranking
{
public:
    explicit Ranking(std::vector<int> perm);

    static Ranking identity(int m);

    int size() const noexcept { return static_cast<int>(perm_.size()); }
    int operator[](std::size_t i) const { return perm_[i]; }
    const std::vector<int>& perm() const noexcept { return perm_; }

    friend bool operator==(const Ranking&, const Ranking&) = default;
    friend auto operator<=>(const Ranking&, const Ranking&) = default;

private:
    struct Unchecked {};
    Ranking(std::vector<int> perm, Unchecked) : perm_(std::move(perm)) {}

    std::vector<int> perm_;

    friend Ranking reversed(const Ranking& r);
    friend Ranking swap_adjacent(const Ranking& r, std::size_t i);
    friend void for_each_ranking(int m, const std::function<void(const Ranking&)>& visit);
};

/// Number of discordant item pairs between two rankings of equal length.
int kendall_tau(const Ranking& a, const Ranking& b);

DistanceFn<Ranking> kendall_distance();

Ranking reversed(const Ranking& r);

/// Swaps the items at positions i and i+1.
Ranking swap_adjacent(const Ranking& r, std::size_t i);

inline constexpr int max_enumerable_length = 9;

std::uint64_t factorial(int m);

/// Visits all m! rankings in lexicographic order. Requires 1 <= m <= 9.
void for_each_ranking(int m, const std::function<void(const Ranking&)>& visit);

std::vector<Ranking> enumerate_rankings(int m);

} // namespace gmed
