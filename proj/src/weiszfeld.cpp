#include <cmath>
#include <vector>

#include "gmed/solvers.hpp"

namespace gmed {

namespace {

constexpr double coincidence_radius = 1e-12;

double objective(std::span<const Vector> points, const std::vector<double>& w, const Vector& x)
{
    double omega = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) omega += w[i] * (x - points[i]).norm();
    return omega;
}

} // namespace

MedianResult<Vector> weiszfeld(std::span<const Vector> points, std::span<const double> weights,
                               const IterativeOptions& options)
{
    require(!points.empty(), "weiszfeld needs at least one point");
    require(options.tol > 0.0, "tolerance must be > 0");
    require(options.max_iter >= 1, "max_iter must be >= 1");
    const auto dim = points.front().size();
    for (const auto& p : points) {
        require(p.size() == dim, "points differ in dimension");
        require(p.allFinite(), "points must be finite");
    }
    std::vector<double> w(points.size(), 1.0);
    if (!weights.empty()) {
        require(weights.size() == points.size(), "weights and points differ in length");
        w.assign(weights.begin(), weights.end());
        for (double wi : w) require(std::isfinite(wi) && wi > 0.0, "weights must be finite and strictly positive");
    }

    double total = 0.0;
    Vector x = Vector::Zero(dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        x += w[i] * points[i];
        total += w[i];
    }
    x /= total;

    MedianResult<Vector> result{x, objective(points, w, x), 0, false, "weiszfeld", {}, 0};
    result.objective_trace.push_back(result.omega);

    for (int it = 1; it <= options.max_iter; ++it) {
        double anchored_weight = 0.0;
        double inv_sum = 0.0;
        Vector weighted_sum = Vector::Zero(dim);
        Vector pull = Vector::Zero(dim);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Vector diff = points[i] - x;
            const double dist = diff.norm();
            if (dist < coincidence_radius) {
                anchored_weight += w[i];
                continue;
            }
            inv_sum += w[i] / dist;
            weighted_sum += (w[i] / dist) * points[i];
            pull += (w[i] / dist) * diff;
        }
        result.iterations = it;

        if (inv_sum == 0.0) {
            // Every point coincides with x.
            result.converged = true;
            break;
        }

        Vector next = weighted_sum / inv_sum;
        if (anchored_weight > 0.0) {
            ++result.anchor_hits;
            const double pull_norm = pull.norm();
            if (pull_norm <= anchored_weight) {
                // x is a data point satisfying the subgradient optimality condition.
                result.converged = true;
                break;
            }
            const double keep = anchored_weight / pull_norm;
            next = (1.0 - keep) * next + keep * x;
        }

        const double step = (next - x).norm();
        x = std::move(next);
        result.objective_trace.push_back(objective(points, w, x));
        if (step < options.tol) {
            result.converged = true;
            break;
        }
    }

    result.median = x;
    result.omega = objective(points, w, x);
    return result;
}

} // namespace gmed
