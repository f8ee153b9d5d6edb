#pragma once

#include <Eigen/Core>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <string>

#include "gmed/metric.hpp"
#include "gmed/ranking.hpp"
#include "gmed/rotation.hpp"

namespace gmed {

using Vector = Eigen::VectorXd;
using Integer = std::int64_t;

/// Integers split into S1 = {-c..c} and S2 = the rest; squared difference
/// inside S1, absolute difference otherwise. Not a metric for c >= 1.
struct HybridIntDistance
{
    Integer c = 1;
};

double hybrid_int_distance(const HybridIntDistance& h, Integer x, Integer y);
DistanceFn<Integer> hybrid_distance(HybridIntDistance h);

// Space descriptors. Each bundles a metric with optional capabilities:
// `weighted_mean(x, z, w)` and candidate enumeration.

struct RealSpace
{
    using Object = double;
    static constexpr const char* name = "real";

    DistanceFn<double> distance() const
    {
        return {[](const double& a, const double& b) { return std::abs(a - b); }, true};
    }
    double weighted_mean(double x, double z, double w) const { return (1.0 - w) * x + w * z; }
};

struct VectorSpace
{
    using Object = Vector;
    static constexpr const char* name = "vector";

    DistanceFn<Vector> distance() const;
    Vector weighted_mean(const Vector& x, const Vector& z, double w) const;
};

/// Integers with |x - y|. Weighted means exist only on the integer lattice,
/// so `weighted_mean` rounds the real interpolant to the nearest integer.
struct IntegerSpace
{
    using Object = Integer;
    static constexpr const char* name = "integer";

    DistanceFn<Integer> distance() const
    {
        return {[](const Integer& a, const Integer& b) { return std::abs(double(a) - double(b)); }, true};
    }
    Integer weighted_mean(Integer x, Integer z, double w) const;
};

/// Integers restricted to [lo, hi], enumerable for exhaustive search.
struct IntegerRangeSpace : IntegerSpace
{
    Integer lo = 0;
    Integer hi = 0;

    std::uint64_t candidate_count() const
    {
        require(lo <= hi, "integer range is empty");
        return static_cast<std::uint64_t>(hi - lo) + 1;
    }
    void for_each_candidate(const std::function<void(const Integer&)>& visit) const
    {
        for (Integer v = lo; v <= hi; ++v) visit(v);
    }
};

struct RankingSpace
{
    using Object = Ranking;
    static constexpr const char* name = "ranking";

    int length = 1;

    DistanceFn<Ranking> distance() const { return kendall_distance(); }
    std::uint64_t candidate_count() const;
    void for_each_candidate(const std::function<void(const Ranking&)>& visit) const
    {
        for_each_ranking(length, visit);
    }
};

struct RotationSpace
{
    using Object = Rotation3;
    static constexpr const char* name = "rotation";

    DistanceFn<Rotation3> distance() const { return angular_metric(); }
    Rotation3 weighted_mean(const Rotation3& x, const Rotation3& z, double w) const
    {
        return geodesic_interpolate(x, z, w);
    }
};

template <typename S>
concept HasWeightedMean = requires(const S& s, const typename S::Object& x, double w) {
    { s.weighted_mean(x, x, w) } -> std::convertible_to<typename S::Object>;
};

template <typename S>
concept Enumerable = requires(const S& s) {
    { s.candidate_count() } -> std::convertible_to<std::uint64_t>;
    s.for_each_candidate(std::function<void(const typename S::Object&)>{});
};

/// Object y between x and z with d(x,y) = w d(x,z) and d(y,z) = (1-w) d(x,z).
/// Spaces without a weighted-mean constructor raise a capability error.
template <typename S>
typename S::Object weighted_mean(const S& space, const typename S::Object& x, const typename S::Object& z, double w)
{
    require(w >= 0.0 && w <= 1.0, "weighted-mean weight must lie in [0, 1]");
    if constexpr (HasWeightedMean<S>) {
        return space.weighted_mean(x, z, w);
    } else {
        throw Error(ErrorKind::capability, std::string("space '") + S::name + "' has no weighted mean");
    }
}

} // namespace gmed
