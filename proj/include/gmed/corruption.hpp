#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "gmed/metric.hpp"
#include "gmed/rng.hpp"

namespace gmed {

enum class CorruptionMode { add, replace };

constexpr std::string_view to_string(CorruptionMode mode) noexcept
{
    return mode == CorruptionMode::add ? "add" : "replace";
}

/// Outliers either appended to the set (add) or substituted for the objects
/// at `replaced_indices` (replace). In replace mode `outliers[j]` takes the
/// place of the object at `replaced_indices[j]` and inherits its weight.
template <typename T>
struct CorruptionPlan
{
    CorruptionMode mode = CorruptionMode::replace;
    std::size_t k = 0;
    std::vector<std::size_t> replaced_indices;
    std::vector<T> outliers;
    /// Add mode only; empty means weight 1 for every outlier.
    std::vector<double> outlier_weights;
    std::uint64_t seed = 0;
};

template <typename T>
struct CorruptedSet
{
    WeightedSet<T> set;
    /// Indices into the original set of the objects that survived (X = O ∩ Q).
    std::vector<std::size_t> surviving;
    /// Weights of the corrupted objects P as they appear in Q.
    std::vector<double> corrupted_weights;

    /// X as a weighted set; empty when every object was replaced.
    std::optional<WeightedSet<T>> survivors(const WeightedSet<T>& original) const
    {
        if (surviving.empty()) return std::nullopt;
        std::vector<T> objects;
        std::vector<double> weights;
        for (std::size_t i : surviving) {
            objects.push_back(original[i]);
            weights.push_back(original.weight(i));
        }
        return WeightedSet<T>(std::move(objects), std::move(weights));
    }
};

/// First k entries of a seeded uniform permutation of 0..n-1, in draw order.
/// Plans for increasing k under one seed are therefore nested.
inline std::vector<std::size_t> draw_indices(std::size_t n, std::size_t k, std::uint64_t seed)
{
    require(k <= n, "cannot draw more indices than the set holds");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Engine engine = make_engine(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(engine)]);
    }
    perm.resize(k);
    return perm;
}

/// Replace plan for a set of size n; one index is drawn per outlier.
template <typename T>
CorruptionPlan<T> make_replace_plan(std::size_t n, std::vector<T> outliers, std::uint64_t seed)
{
    const auto drawn = draw_indices(n, outliers.size(), seed);
    std::vector<std::size_t> order(drawn.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return drawn[a] < drawn[b]; });

    CorruptionPlan<T> plan;
    plan.mode = CorruptionMode::replace;
    plan.k = outliers.size();
    plan.seed = seed;
    for (std::size_t j : order) {
        plan.replaced_indices.push_back(drawn[j]);
        plan.outliers.push_back(std::move(outliers[j]));
    }
    return plan;
}

template <typename T>
CorruptionPlan<T> make_add_plan(std::vector<T> outliers, std::vector<double> weights = {}, std::uint64_t seed = 0)
{
    CorruptionPlan<T> plan;
    plan.mode = CorruptionMode::add;
    plan.k = outliers.size();
    plan.outliers = std::move(outliers);
    plan.outlier_weights = std::move(weights);
    plan.seed = seed;
    return plan;
}

template <typename T>
void validate(const CorruptionPlan<T>& plan, std::size_t n)
{
    require(plan.outliers.size() == plan.k, "plan must carry exactly k outliers");
    if (plan.mode == CorruptionMode::add) {
        require(plan.replaced_indices.empty(), "add plans must not name replaced indices");
        require(plan.outlier_weights.empty() || plan.outlier_weights.size() == plan.k,
                "outlier weights must be empty or one per outlier");
        for (double w : plan.outlier_weights) {
            require(std::isfinite(w) && w > 0.0, "outlier weights must be finite and strictly positive");
        }
        return;
    }
    require(plan.k <= n, "cannot replace more objects than the set holds");
    require(plan.outlier_weights.empty(), "replaced objects keep their original weights");
    require(plan.replaced_indices.size() == plan.k, "replace plans need exactly k indices");
    for (std::size_t j = 0; j < plan.k; ++j) {
        require(plan.replaced_indices[j] < n, "replaced index out of range");
        require(j == 0 || plan.replaced_indices[j - 1] < plan.replaced_indices[j],
                "replaced indices must be sorted and distinct");
    }
}

/// Builds Q from O according to the plan.
template <typename T>
CorruptedSet<T> apply(const CorruptionPlan<T>& plan, const WeightedSet<T>& original)
{
    validate(plan, original.size());
    std::vector<T> objects = original.objects();
    std::vector<double> weights = original.weights();
    std::vector<std::size_t> surviving;
    std::vector<double> corrupted_weights;

    if (plan.mode == CorruptionMode::add) {
        surviving.resize(original.size());
        std::iota(surviving.begin(), surviving.end(), 0);
        for (std::size_t j = 0; j < plan.k; ++j) {
            const double w = plan.outlier_weights.empty() ? 1.0 : plan.outlier_weights[j];
            objects.push_back(plan.outliers[j]);
            weights.push_back(w);
            corrupted_weights.push_back(w);
        }
    } else {
        std::size_t next = 0;
        for (std::size_t i = 0; i < original.size(); ++i) {
            if (next < plan.k && plan.replaced_indices[next] == i) {
                objects[i] = plan.outliers[next];
                corrupted_weights.push_back(weights[i]);
                ++next;
            } else {
                surviving.push_back(i);
            }
        }
    }
    return {WeightedSet<T>(std::move(objects), std::move(weights)), std::move(surviving),
            std::move(corrupted_weights)};
}

/// d(original median, corrupted median).
template <typename T>
double displacement(const DistanceFn<T>& d, const T& original_median, const T& corrupted_median)
{
    return d(original_median, corrupted_median);
}

} // namespace gmed
