#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gmed {

/// Unreduced fraction; equality compares by value.
struct Fraction
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
};

/// Value of a displacement bound. Inapplicable bounds carry +infinity and name
/// the precondition they violate.
struct BoundReport
{
    std::string theorem;
    double value = std::numeric_limits<double>::infinity();
    bool applicable = false;
    std::string precondition_note;
};

/// floor((n+1)/2) / n, the breakdown point of the metric GM.
Fraction breakdown_floor(std::int64_t n);

/// Radius bound floor((n+1)/2) * (2R + c) for up to floor((n-1)/2) replaced
/// objects. R is the largest distance from the original median to an original
/// object; c bridges the ball of radius 2R in discrete spaces (0 in continuous ones).
BoundReport thm1_bound(std::int64_t n, double radius, double c, std::optional<std::int64_t> k = std::nullopt);

/// d(o, q) <= 2 / (n - k) * Omega_O(o) after adding k objects to n.
BoundReport thm2_added_bound(std::int64_t n, std::int64_t k, double omega_original);

/// d(o, q) <= 4 / (n - 2k) * Omega_X(x) after replacing k of n objects;
/// X is the surviving part and x its median.
BoundReport thm3_replaced_bound(std::int64_t n, std::int64_t k, double omega_survivors);

/// Omega_Q(o) - Omega_Q(q) < 2k / (n - k) * Omega_O(o) after adding k objects.
BoundReport thm4_sod_bound(std::int64_t n, std::int64_t k, double omega_original);

/// Weighted form of the added-object bound: 2 / (W_O - W_P) * Omega^w_O(o).
BoundReport thm5_weighted_added_bound(std::span<const double> weights_original, std::span<const double> weights_added,
                                      double omega_original);

/// Weighted form of the replaced-object bound: 4 / (W_X - W_P) * Omega^w_X(x).
BoundReport thm6_weighted_replaced_bound(std::span<const double> weights_survivors,
                                         std::span<const double> weights_replaced, double omega_survivors);

/// k/n for the largest k such that the k largest weights sum to strictly
/// less than the remaining weights.
Fraction weighted_breakdown_estimate(std::span<const double> weights);

/// Distance d / ((n-1)^(1/(p-1)) + 1) that a single outlier at distance d
/// drags the GM under d^p away from n-1 coincident inliers.
double nonmetric_pull(double d, int n, int p);

/// n1 objects at 0, n2 at d, plus k = n1 - n2 + 1 far outliers. The added-object
/// bound evaluates to 2 n2 d / (2 n2 - 1) while the median moves by exactly d.
struct TightnessExample
{
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t k = 0;
    double d = 0.0;
    double bound = 0.0;
    double actual = 0.0;
    std::vector<double> original;
    std::vector<double> added;
};

TightnessExample tightness_example(std::int64_t n1, std::int64_t n2, std::int64_t k, double d);

} // namespace gmed
