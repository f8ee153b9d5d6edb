#include "gmed/spaces.hpp"

#include <cmath>

namespace gmed {

double hybrid_int_distance(const HybridIntDistance& h, Integer x, Integer y)
{
    const bool x_inner = x >= -h.c && x <= h.c;
    const bool y_inner = y >= -h.c && y <= h.c;
    const double diff = std::abs(double(x) - double(y));
    return x_inner && y_inner ? diff * diff : diff;
}

DistanceFn<Integer> hybrid_distance(HybridIntDistance h)
{
    require(h.c >= 1, "hybrid distance threshold c must be >= 1");
    return {[h](const Integer& x, const Integer& y) { return hybrid_int_distance(h, x, y); }, false};
}

DistanceFn<Vector> VectorSpace::distance() const
{
    return {[](const Vector& a, const Vector& b) {
                require(a.size() == b.size(), "vectors differ in dimension");
                return (a - b).norm();
            },
            true};
}

Vector VectorSpace::weighted_mean(const Vector& x, const Vector& z, double w) const
{
    require(x.size() == z.size(), "vectors differ in dimension");
    if (w == 0.0) return x;
    if (w == 1.0) return z;
    return (1.0 - w) * x + w * z;
}

Integer IntegerSpace::weighted_mean(Integer x, Integer z, double w) const
{
    if (w == 0.0) return x;
    if (w == 1.0) return z;
    return x + static_cast<Integer>(std::llround(w * (double(z) - double(x))));
}

std::uint64_t RankingSpace::candidate_count() const
{
    require(length >= 1, "ranking length must be >= 1");
    if (length > 20) return UINT64_MAX;
    return factorial(length);
}

} // namespace gmed
