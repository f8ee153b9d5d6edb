#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmed/metric.hpp"
#include "gmed/spaces.hpp"

namespace gmed {

template <typename T>
struct MedianResult
{
    T median;
    /// Weighted sum of (powered) distances at `median`.
    double omega = 0.0;
    int iterations = 0;
    bool converged = true;
    std::string solver;
    /// Objective after each iterate, starting with the initial point. Empty for exact solvers.
    std::vector<double> objective_trace;
    /// Iterations on which the iterate coincided with a data point.
    int anchor_hits = 0;
};

struct IterativeOptions
{
    double tol = 1e-9;
    int max_iter = 10'000;
};

inline constexpr double default_so3_tol = 1e-7;
inline constexpr std::uint64_t default_enumeration_cap = 1'000'000;

/// Set element minimizing the weighted sum of distances^p; ties go to the lowest index.
template <typename T>
MedianResult<T> medoid(const DistanceFn<T>& d, const WeightedSet<T>& set, int p = 1)
{
    std::size_t best = 0;
    double best_omega = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const double omega = sum_of_distances(d, set[i], set, p);
        if (omega < best_omega) {
            best_omega = omega;
            best = i;
        }
    }
    MedianResult<T> result{set[best], best_omega, static_cast<int>(set.size()), true, "medoid", {}, 0};
    return result;
}

/// Global minimizer of sum_i w_i d(., o_i)^p over every candidate the space
/// enumerates. The first minimizer in enumeration order wins ties.
template <Enumerable S>
MedianResult<typename S::Object> exhaustive_median(const S& space, const DistanceFn<typename S::Object>& d,
                                                   const WeightedSet<typename S::Object>& set, int p = 1,
                                                   std::uint64_t cap = default_enumeration_cap)
{
    using T = typename S::Object;
    require(p >= 1, "distance power must be >= 1");
    const std::uint64_t count = space.candidate_count();
    if (count > cap) {
        throw Error(ErrorKind::resource, "candidate count " + std::to_string(count) +
                                             " exceeds enumeration cap " + std::to_string(cap));
    }

    std::optional<T> best;
    double best_omega = std::numeric_limits<double>::infinity();
    space.for_each_candidate([&](const T& candidate) {
        double omega = 0.0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            omega += set.weight(i) * ipow(d(candidate, set[i]), p);
            // Terms are nonnegative, so a partial sum at or above the best
            // can never become a strict improvement.
            if (omega >= best_omega) return;
        }
        best_omega = omega;
        best = candidate;
    });
    require(best.has_value(), "enumeration produced no candidates");
    return MedianResult<T>{*best, best_omega, static_cast<int>(count), true, "exhaustive", {}, 0};
}

/// Lower weighted median: smallest value whose cumulative weight reaches half the total.
MedianResult<double> real_line_median(std::span<const double> values, std::span<const double> weights = {});

/// Weighted arithmetic mean; omega is the weighted sum of squared distances.
MedianResult<double> real_line_mean(std::span<const double> values, std::span<const double> weights = {});

/// Weighted geometric median in R^d by Weiszfeld iteration from the weighted
/// centroid. Iterates that land on a data point take the Vardi-Zhang
/// modified step, or stop if that point satisfies the optimality condition.
MedianResult<Vector> weiszfeld(std::span<const Vector> points, std::span<const double> weights = {},
                               const IterativeOptions& options = {});

/// Minimizer of sum_i w_i theta(R, R_i) on SO(3) by Riemannian Weiszfeld steps
/// from the set medoid.
MedianResult<Rotation3> so3_median(std::span<const Rotation3> rotations, std::span<const double> weights = {},
                                   const IterativeOptions& options = {default_so3_tol, 10'000});

/// Minimizer of sum_i w_i theta(R, R_i)^2 (Karcher mean) by Riemannian
/// gradient descent from the set medoid under the squared objective.
MedianResult<Rotation3> so3_mean(std::span<const Rotation3> rotations, std::span<const double> weights = {},
                                 const IterativeOptions& options = {default_so3_tol, 10'000});

/// Distance from x to the minimizer of Omega under d^p for the multi-set
/// {x repeated n-1 times, y}, searched over the weighted means of x and y at
/// w = i/grid. Measures how far one outlier drags the d^p median.
template <typename S>
double nonmetric_pull_empirical(const S& space, const typename S::Object& x, const typename S::Object& y, int n,
                                int p, int grid)
{
    using T = typename S::Object;
    require(n >= 2, "n must be >= 2");
    require(p >= 2, "p must be >= 2");
    require(grid >= 10, "grid must be >= 10");
    const auto d = space.distance();

    double best_omega = std::numeric_limits<double>::infinity();
    std::optional<T> best;
    for (int i = 0; i <= grid; ++i) {
        const double w = static_cast<double>(i) / static_cast<double>(grid);
        T h = weighted_mean(space, x, y, w);
        const double omega = (n - 1) * ipow(d(h, x), p) + ipow(d(h, y), p);
        if (omega < best_omega) {
            best_omega = omega;
            best = std::move(h);
        }
    }
    return d(x, *best);
}

} // namespace gmed
