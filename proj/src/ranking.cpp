#include "gmed/ranking.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace gmed {

Ranking::Ranking(std::vector<int> perm) : perm_(std::move(perm))
{
    const auto m = perm_.size();
    require(m >= 1, "ranking must contain at least one item");
    std::vector<bool> seen(m + 1, false);
    for (int item : perm_) {
        require(item >= 1 && static_cast<std::size_t>(item) <= m && !seen[static_cast<std::size_t>(item)],
                "ranking must be a permutation of 1.." + std::to_string(m));
        seen[static_cast<std::size_t>(item)] = true;
    }
}

Ranking Ranking::identity(int m)
{
    require(m >= 1, "ranking length must be >= 1");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    return Ranking(std::move(perm), Unchecked{});
}

int kendall_tau(const Ranking& a, const Ranking& b)
{
    require(a.size() == b.size(), "rankings differ in length");
    const auto m = static_cast<std::size_t>(a.size());

    // Position of every item in b, then count inversions of a read through it.
    constexpr std::size_t small = 32;
    std::array<int, small + 1> pos_small{};
    std::vector<int> pos_large;
    int* pos = pos_small.data();
    if (m > small) {
        pos_large.resize(m + 1);
        pos = pos_large.data();
    }
    for (std::size_t i = 0; i < m; ++i) pos[b[i]] = static_cast<int>(i);

    int discordant = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const int pi = pos[a[i]];
        for (std::size_t j = i + 1; j < m; ++j) discordant += pi > pos[a[j]];
    }
    return discordant;
}

DistanceFn<Ranking> kendall_distance()
{
    return DistanceFn<Ranking>{[](const Ranking& a, const Ranking& b) { return double(kendall_tau(a, b)); }, true};
}

Ranking reversed(const Ranking& r)
{
    std::vector<int> perm(r.perm().rbegin(), r.perm().rend());
    return Ranking(std::move(perm), Ranking::Unchecked{});
}

Ranking swap_adjacent(const Ranking& r, std::size_t i)
{
    require(i + 1 < r.perm().size(), "adjacent swap position out of range");
    auto perm = r.perm();
    std::swap(perm[i], perm[i + 1]);
    return Ranking(std::move(perm), Ranking::Unchecked{});
}

std::uint64_t factorial(int m)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void for_each_ranking(int m, const std::function<void(const Ranking&)>& visit)
{
    require(m >= 1 && m <= max_enumerable_length,
            "ranking enumeration length must be in [1, " + std::to_string(max_enumerable_length) + "]");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        visit(Ranking(perm, Ranking::Unchecked{}));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Ranking> enumerate_rankings(int m)
{
    std::vector<Ranking> all;
    if (m >= 1 && m <= max_enumerable_length) all.reserve(factorial(m));
    for_each_ranking(m, [&](const Ranking& r) { all.push_back(r); });
    return all;
}

} // namespace gmed
