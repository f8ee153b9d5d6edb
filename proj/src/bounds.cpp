#include "gmed/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gmed/error.hpp"

namespace gmed {

namespace {

BoundReport applicable(std::string theorem, double value)
{
    return {std::move(theorem), value, true, ""};
}

BoundReport inapplicable(std::string theorem, std::string note)
{
    return {std::move(theorem), std::numeric_limits<double>::infinity(), false, std::move(note)};
}

void require_omega(double omega)
{
    require(std::isfinite(omega) && omega >= 0.0, "sum of distances must be finite and >= 0");
}

double positive_sum(std::span<const double> weights)
{
    double total = 0.0;
    for (double w : weights) {
        require(std::isfinite(w) && w > 0.0, "weights must be finite and strictly positive");
        total += w;
    }
    return total;
}

} // namespace

Fraction breakdown_floor(std::int64_t n)
{
    require(n >= 1, "n must be >= 1");
    return {(n + 1) / 2, n};
}

BoundReport thm1_bound(std::int64_t n, double radius, double c, std::optional<std::int64_t> k)
{
    require(n >= 1, "n must be >= 1");
    require(std::isfinite(radius) && radius >= 0.0, "radius R must be finite and >= 0");
    require(std::isfinite(c) && c >= 0.0, "bridge constant c must be finite and >= 0");
    if (k) {
        require(*k >= 0, "k must be >= 0");
        if (*k > (n - 1) / 2) return inapplicable("thm1", "requires k <= floor((n-1)/2)");
    }
    return applicable("thm1", static_cast<double>((n + 1) / 2) * (2.0 * radius + c));
}

BoundReport thm2_added_bound(std::int64_t n, std::int64_t k, double omega_original)
{
    require(n >= 1, "n must be >= 1");
    require(k >= 0, "k must be >= 0");
    require_omega(omega_original);
    if (k >= n) return inapplicable("thm2", "requires k < n");
    return applicable("thm2", 2.0 * omega_original / static_cast<double>(n - k));
}

BoundReport thm3_replaced_bound(std::int64_t n, std::int64_t k, double omega_survivors)
{
    require(n >= 1, "n must be >= 1");
    require(k >= 0, "k must be >= 0");
    require_omega(omega_survivors);
    if (k > (n - 1) / 2) return inapplicable("thm3", "requires k <= floor((n-1)/2)");
    return applicable("thm3", 4.0 * omega_survivors / static_cast<double>(n - 2 * k));
}

BoundReport thm4_sod_bound(std::int64_t n, std::int64_t k, double omega_original)
{
    require(n >= 1, "n must be >= 1");
    require(k >= 0, "k must be >= 0");
    require_omega(omega_original);
    if (k >= n) return inapplicable("thm4", "requires k < n");
    return applicable("thm4", 2.0 * static_cast<double>(k) * omega_original / static_cast<double>(n - k));
}

BoundReport thm5_weighted_added_bound(std::span<const double> weights_original, std::span<const double> weights_added,
                                      double omega_original)
{
    require(!weights_original.empty(), "original set must be non-empty");
    const double w_o = positive_sum(weights_original);
    const double w_p = positive_sum(weights_added);
    require_omega(omega_original);
    if (!(w_o > w_p)) return inapplicable("thm5", "requires sum of original weights > sum of added weights");
    return applicable("thm5", 2.0 * omega_original / (w_o - w_p));
}

BoundReport thm6_weighted_replaced_bound(std::span<const double> weights_survivors,
                                         std::span<const double> weights_replaced, double omega_survivors)
{
    const double w_x = positive_sum(weights_survivors);
    const double w_p = positive_sum(weights_replaced);
    require_omega(omega_survivors);
    if (!(w_x > w_p)) return inapplicable("thm6", "requires sum of surviving weights > sum of replaced weights");
    return applicable("thm6", 4.0 * omega_survivors / (w_x - w_p));
}

Fraction weighted_breakdown_estimate(std::span<const double> weights)
{
    require(!weights.empty(), "weights must be non-empty");
    std::vector<double> sorted(weights.begin(), weights.end());
    const double total = positive_sum(sorted);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    const auto n = static_cast<std::int64_t>(sorted.size());
    std::int64_t best = 0;
    double heaviest = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        heaviest += sorted[static_cast<std::size_t>(k - 1)];
        if (heaviest < total - heaviest) {
            best = k;
        } else {
            break;
        }
    }
    return {best, n};
}

double nonmetric_pull(double d, int n, int p)
{
    require(std::isfinite(d) && d > 0.0, "d must be finite and > 0");
    require(n >= 2, "n must be >= 2");
    require(p >= 2, "p must be >= 2");
    return d / (std::pow(static_cast<double>(n - 1), 1.0 / static_cast<double>(p - 1)) + 1.0);
}

TightnessExample tightness_example(std::int64_t n1, std::int64_t n2, std::int64_t k, double d)
{
    require(n2 >= 1, "n2 must be >= 1");
    require(n1 > n2, "n1 must exceed n2");
    require(k == n1 - n2 + 1, "k must equal n1 - n2 + 1");
    require(std::isfinite(d) && d > 0.0, "d must be finite and > 0");

    TightnessExample ex;
    ex.n1 = n1;
    ex.n2 = n2;
    ex.k = k;
    ex.d = d;
    ex.original.assign(static_cast<std::size_t>(n1), 0.0);
    ex.original.insert(ex.original.end(), static_cast<std::size_t>(n2), d);
    ex.added.assign(static_cast<std::size_t>(k), 1000.0 * d);

    const double omega_original = static_cast<double>(n2) * d;
    ex.bound = thm2_added_bound(n1 + n2, k, omega_original).value;
    ex.actual = d;
    return ex;
}

} // namespace gmed
