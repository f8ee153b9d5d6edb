#include <cmath>
#include <numbers>
#include <vector>

#include "gmed/solvers.hpp"

namespace gmed {

namespace {

constexpr double coincidence_radius = 1e-12;
constexpr double antipodal_margin = 1e-9;
constexpr int max_halvings = 40;

std::vector<double> checked_weights(std::span<const Rotation3> rotations, std::span<const double> weights)
{
    require(!rotations.empty(), "need at least one rotation");
    if (weights.empty()) return std::vector<double>(rotations.size(), 1.0);
    require(weights.size() == rotations.size(), "weights and rotations differ in length");
    for (double w : weights) require(std::isfinite(w) && w > 0.0, "weights must be finite and strictly positive");
    return {weights.begin(), weights.end()};
}

double objective(std::span<const Rotation3> rotations, const std::vector<double>& w, const Rotation3& r, int p)
{
    double omega = 0.0;
    for (std::size_t i = 0; i < rotations.size(); ++i) omega += w[i] * ipow(angular_distance(r, rotations[i]), p);
    return omega;
}

enum class StepKind { median, mean };

struct Direction
{
    Vec3 step = Vec3::Zero();
    bool optimal = false;  // anchored at a data point that is already optimal
    bool anchored = false;
    bool stalled = false;  // some data point is antipodal; log map undefined
};

Direction direction(std::span<const Rotation3> rotations, const std::vector<double>& w, const Rotation3& r,
                    StepKind kind)
{
    Direction dir;
    double anchored_weight = 0.0;
    double inv_sum = 0.0;
    double total = 0.0;
    Vec3 weighted = Vec3::Zero();
    for (std::size_t i = 0; i < rotations.size(); ++i) {
        const Vec3 v = relative_log(r, rotations[i]);
        const double theta = v.norm();
        if (theta > std::numbers::pi - antipodal_margin) {
            dir.stalled = true;
            return dir;
        }
        total += w[i];
        if (kind == StepKind::mean) {
            weighted += w[i] * v;
            continue;
        }
        if (theta < coincidence_radius) {
            anchored_weight += w[i];
            continue;
        }
        inv_sum += w[i] / theta;
        weighted += (w[i] / theta) * v;
    }

    if (kind == StepKind::mean) {
        dir.step = weighted / total;
        return dir;
    }
    if (inv_sum == 0.0) {
        dir.optimal = true;
        return dir;
    }
    // `weighted` is the negative Riemannian gradient of the non-anchored terms.
    dir.step = weighted / inv_sum;
    if (anchored_weight > 0.0) {
        dir.anchored = true;
        const double pull = weighted.norm();
        if (pull <= anchored_weight) {
            dir.optimal = true;
            return dir;
        }
        dir.step *= 1.0 - anchored_weight / pull;
    }
    return dir;
}

MedianResult<Rotation3> solve(std::span<const Rotation3> rotations, std::span<const double> weights,
                              const IterativeOptions& options, StepKind kind)
{
    const auto w = checked_weights(rotations, weights);
    require(options.tol > 0.0, "tolerance must be > 0");
    require(options.max_iter >= 1, "max_iter must be >= 1");
    const int p = kind == StepKind::median ? 1 : 2;

    const WeightedSet<Rotation3> set({rotations.begin(), rotations.end()}, w);
    const auto start = medoid(angular_metric(), set, p);

    MedianResult<Rotation3> result{start.median, start.omega, 0, false,
                                   kind == StepKind::median ? "so3_median" : "so3_mean", {}, 0};
    result.objective_trace.push_back(result.omega);

    Rotation3 r = start.median;
    double omega = start.omega;
    for (int it = 1; it <= options.max_iter; ++it) {
        result.iterations = it;
        const Direction dir = direction(rotations, w, r, kind);
        if (dir.stalled) break;
        if (dir.anchored) ++result.anchor_hits;
        if (dir.optimal) {
            result.converged = true;
            break;
        }

        // Backtrack so the objective never increases.
        Vec3 step = dir.step;
        Rotation3 next = r * Rotation3::exp(step);
        double next_omega = objective(rotations, w, next, p);
        int halvings = 0;
        while (next_omega > omega && halvings < max_halvings) {
            step *= 0.5;
            next = r * Rotation3::exp(step);
            next_omega = objective(rotations, w, next, p);
            ++halvings;
        }
        if (next_omega > omega) {
            // No descent along the step at any scale: stationary to working precision.
            result.converged = true;
            break;
        }
        r = next;
        omega = next_omega;
        result.objective_trace.push_back(omega);
        if (step.norm() < options.tol) {
            result.converged = true;
            break;
        }
    }
    result.median = r;
    result.omega = omega;
    return result;
}

} // namespace

MedianResult<Rotation3> so3_median(std::span<const Rotation3> rotations, std::span<const double> weights,
                                   const IterativeOptions& options)
{
    return solve(rotations, weights, options, StepKind::median);
}

MedianResult<Rotation3> so3_mean(std::span<const Rotation3> rotations, std::span<const double> weights,
                                 const IterativeOptions& options)
{
    return solve(rotations, weights, options, StepKind::mean);
}

} // namespace gmed
