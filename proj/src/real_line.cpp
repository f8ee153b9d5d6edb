#include <algorithm>
#include <numeric>
#include <vector>

#include "gmed/solvers.hpp"

namespace gmed {

namespace {

std::vector<double> unit_or(std::span<const double> weights, std::size_t n)
{
    if (weights.empty()) return std::vector<double>(n, 1.0);
    require(weights.size() == n, "weights and values differ in length");
    for (double w : weights) require(std::isfinite(w) && w > 0.0, "weights must be finite and strictly positive");
    return {weights.begin(), weights.end()};
}

} // namespace

MedianResult<double> real_line_median(std::span<const double> values, std::span<const double> weights)
{
    require(!values.empty(), "median of an empty set");
    const auto w = unit_or(weights, values.size());
    for (double v : values) require(std::isfinite(v), "values must be finite");

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double cumulative = 0.0;
    double median = values[order.back()];
    for (std::size_t idx : order) {
        cumulative += w[idx];
        if (2.0 * cumulative >= total) {
            median = values[idx];
            break;
        }
    }

    double omega = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) omega += w[i] * std::abs(median - values[i]);
    return {median, omega, 0, true, "real_line_median", {}, 0};
}

MedianResult<double> real_line_mean(std::span<const double> values, std::span<const double> weights)
{
    require(!values.empty(), "mean of an empty set");
    const auto w = unit_or(weights, values.size());
    double total = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        require(std::isfinite(values[i]), "values must be finite");
        total += w[i];
        weighted += w[i] * values[i];
    }
    const double mean = weighted / total;
    double omega = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) omega += w[i] * (mean - values[i]) * (mean - values[i]);
    return {mean, omega, 0, true, "real_line_mean", {}, 0};
}

} // namespace gmed
