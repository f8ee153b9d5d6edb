#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmed/error.hpp"
#include "gmed/rng.hpp"

namespace gmed {

/// A distance function over objects of type T together with a claim about
/// whether it satisfies the metric axioms. Evaluations must be pure.
template <typename T>
struct DistanceFn
{
    std::function<double(const T&, const T&)> evaluate;
    bool metric_claim = true;

    double operator()(const T& a, const T& b) const { return evaluate(a, b); }
};

template <typename T, typename F>
DistanceFn<T> make_distance(F&& f, bool metric_claim = true)
{
    return DistanceFn<T>{std::function<double(const T&, const T&)>(std::forward<F>(f)), metric_claim};
}

/// Multi-set of objects with strictly positive weights.
template <typename T>
class WeightedSet
{
public:
    explicit WeightedSet(std::vector<T> objects)
        : objects_(std::move(objects)), weights_(objects_.size(), 1.0)
    {
        require(!objects_.empty(), "weighted set must contain at least one object");
    }

    WeightedSet(std::vector<T> objects, std::vector<double> weights)
        : objects_(std::move(objects)), weights_(std::move(weights))
    {
        require(!objects_.empty(), "weighted set must contain at least one object");
        require(objects_.size() == weights_.size(), "weights and objects differ in length");
        for (double w : weights_) {
            require(std::isfinite(w) && w > 0.0, "weights must be finite and strictly positive");
        }
    }

    std::size_t size() const noexcept { return objects_.size(); }
    const std::vector<T>& objects() const noexcept { return objects_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const T& operator[](std::size_t i) const { return objects_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }

    double total_weight() const
    {
        double total = 0.0;
        for (double w : weights_) total += w;
        return total;
    }

    bool unit_weights() const
    {
        return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
    }

private:
    std::vector<T> objects_;
    std::vector<double> weights_;
};

/// x^p for small positive integer p.
inline double ipow(double x, int p)
{
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

/// Weighted sum of (powered) distances from `candidate` to every set member.
template <typename T>
double sum_of_distances(const DistanceFn<T>& d, const T& candidate, const WeightedSet<T>& set, int p = 1)
{
    require(p >= 1, "distance power must be >= 1");
    double omega = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        omega += set.weight(i) * ipow(d(candidate, set[i]), p);
    }
    return omega;
}

struct MetricCheckReport
{
    std::size_t symmetry_violations = 0;
    std::optional<std::pair<std::size_t, std::size_t>> worst_symmetry_pair;
    double worst_symmetry_gap = 0.0;

    std::size_t identity_violations = 0;
    std::size_t positivity_violations = 0;

    std::size_t triangle_violations = 0;
    std::optional<std::array<std::size_t, 3>> worst_triangle;
    /// d(a,c) - d(a,b) - d(b,c) at the worst triple.
    double worst_triangle_margin = 0.0;

    std::size_t triples_sampled = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    double tol = 0.0;

    std::size_t total_violations() const
    {
        return symmetry_violations + identity_violations + positivity_violations + triangle_violations;
    }
};

namespace detail {

inline bool lex_less(const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b)
{
    return a < b;
}

template <typename T>
void check_pair(const DistanceFn<T>& d, std::span<const T> sample, std::size_t i, std::size_t j, double tol,
                MetricCheckReport& report)
{
    const double dij = d(sample[i], sample[j]);
    const double dji = d(sample[j], sample[i]);
    const double gap = std::abs(dij - dji);
    if (gap > tol) {
        ++report.symmetry_violations;
        const auto pair = std::make_pair(std::min(i, j), std::max(i, j));
        if (!report.worst_symmetry_pair || gap > report.worst_symmetry_gap ||
            (gap == report.worst_symmetry_gap && pair < *report.worst_symmetry_pair)) {
            report.worst_symmetry_gap = gap;
            report.worst_symmetry_pair = pair;
        }
    }
    if (!(sample[i] == sample[j]) && dij <= tol) ++report.positivity_violations;
}

template <typename T>
void check_triple(const DistanceFn<T>& d, std::span<const T> sample, const std::array<std::size_t, 3>& t,
                  double tol, MetricCheckReport& report)
{
    const double ac = d(sample[t[0]], sample[t[2]]);
    const double ab = d(sample[t[0]], sample[t[1]]);
    const double bc = d(sample[t[1]], sample[t[2]]);
    const double margin = ac - (ab + bc);
    if (margin > tol) {
        ++report.triangle_violations;
        if (!report.worst_triangle || margin > report.worst_triangle_margin ||
            (margin == report.worst_triangle_margin && lex_less(t, *report.worst_triangle))) {
            report.worst_triangle_margin = margin;
            report.worst_triangle = t;
        }
    }
}

} // namespace detail

/// Checks the four metric axioms on a sample. When the budget covers every
/// ordered triple the check is exhaustive; otherwise triples are drawn from
/// a stream seeded by `seed`.
template <typename T>
MetricCheckReport check_metric_axioms(const DistanceFn<T>& d, std::span<const T> sample, std::size_t triple_budget,
                                      double tol, std::uint64_t seed)
{
    const std::size_t n = sample.size();
    require(n >= 3, "metric check needs at least 3 sample objects");
    require(triple_budget >= 1, "triple budget must be >= 1");
    require(tol >= 0.0, "tolerance must be nonnegative");

    MetricCheckReport report;
    report.seed = seed;
    report.tol = tol;

    const double n3 = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    if (static_cast<double>(triple_budget) >= n3) {
        report.exhaustive = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (d(sample[i], sample[i]) > tol) ++report.identity_violations;
            for (std::size_t j = i + 1; j < n; ++j) detail::check_pair(d, sample, i, j, tol, report);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    detail::check_triple(d, sample, {a, b, c}, tol, report);
                    ++report.triples_sampled;
                }
        return report;
    }

    Engine engine = make_engine(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < triple_budget; ++s) {
        const std::array<std::size_t, 3> t{pick(engine), pick(engine), pick(engine)};
        if (d(sample[t[0]], sample[t[0]]) > tol) ++report.identity_violations;
        if (t[0] != t[1]) detail::check_pair(d, sample, t[0], t[1], tol, report);
        detail::check_triple(d, sample, t, tol, report);
        ++report.triples_sampled;
    }
    return report;
}

template <typename T>
MetricCheckReport check_metric_axioms(const DistanceFn<T>& d, const std::vector<T>& sample,
                                      std::size_t triple_budget, double tol, std::uint64_t seed)
{
    return check_metric_axioms(d, std::span<const T>(sample), triple_budget, tol, seed);
}

/// d^p. Never a metric for p >= 2 on spaces with a weighted-mean triple.
template <typename T>
DistanceFn<T> power_distance(DistanceFn<T> d, int p)
{
    require(p >= 2, "power must be an integer >= 2");
    auto base = std::move(d.evaluate);
    return DistanceFn<T>{[base, p](const T& a, const T& b) { return ipow(base(a, b), p); }, false};
}

/// sqrt(k(x,x) - 2k(x,y) + k(y,y)). Radicands that are negative by at most
/// `rel_tol` times the magnitude of the terms are clamped to zero.
template <typename T>
DistanceFn<T> kernel_induced_metric(std::function<double(const T&, const T&)> k, double rel_tol = 1e-12)
{
    return DistanceFn<T>{
        [k = std::move(k), rel_tol](const T& x, const T& y) {
            const double kxx = k(x, x);
            const double kxy = k(x, y);
            const double kyy = k(y, y);
            const double radicand = kxx - 2.0 * kxy + kyy;
            if (radicand >= 0.0) return std::sqrt(radicand);
            const double scale = std::abs(kxx) + 2.0 * std::abs(kxy) + std::abs(kyy);
            if (-radicand <= rel_tol * scale) return 0.0;
            throw Error(ErrorKind::not_positive_definite,
                        "kernel radicand " + std::to_string(radicand) + " is negative beyond tolerance");
        },
        true};
}

struct AxiomFixes
{
    bool zero_self = false;
    bool symmetry = false;
    /// Offset c > 0 added to |f| off the diagonal when set.
    std::optional<double> positivity;
};

/// Applies the selected axiom-enforcing transforms in the order
/// zero_self, symmetry, positivity. The triangle inequality is not enforced,
/// so the result never claims to be a metric.
template <typename T>
DistanceFn<T> enforce_axioms(std::function<double(const T&, const T&)> f, const AxiomFixes& fixes)
{
    if (fixes.positivity) require(*fixes.positivity > 0.0, "positivity offset c must be > 0");

    std::function<double(const T&, const T&)> g = std::move(f);
    if (fixes.zero_self) {
        g = [g](const T& a, const T& b) { return g(a, b) - 0.5 * (g(a, a) + g(b, b)); };
    }
    if (fixes.symmetry) {
        g = [g](const T& a, const T& b) { return 0.5 * (g(a, b) + g(b, a)); };
    }
    if (fixes.positivity) {
        const double c = *fixes.positivity;
        g = [g, c](const T& a, const T& b) { return a == b ? 0.0 : std::abs(g(a, b)) + c; };
    }
    return DistanceFn<T>{std::move(g), false};
}

/// Shortest-path closure of a premetric over a finite object list.
template <typename T>
class FiniteMetric
{
public:
    FiniteMetric(std::vector<T> objects, std::vector<double> table)
        : objects_(std::move(objects)), table_(std::make_shared<const std::vector<double>>(std::move(table)))
    {}

    std::size_t size() const noexcept { return objects_.size(); }
    const std::vector<T>& objects() const noexcept { return objects_; }
    double at(std::size_t i, std::size_t j) const { return (*table_)[i * objects_.size() + j]; }

    std::size_t index_of(const T& x) const
    {
        const auto it = std::find(objects_.begin(), objects_.end(), x);
        require(it != objects_.end(), "object is not part of the finite metric's domain");
        return static_cast<std::size_t>(it - objects_.begin());
    }

    DistanceFn<T> distance() const
    {
        auto self = *this;
        return DistanceFn<T>{[self](const T& a, const T& b) { return self.at(self.index_of(a), self.index_of(b)); },
                             true};
    }

private:
    std::vector<T> objects_;
    std::shared_ptr<const std::vector<double>> table_;
};

/// All-pairs shortest paths (Floyd-Warshall) over the complete graph whose
/// edge weights are f. `f` must be zero on the diagonal, positive off it,
/// and symmetric.
template <typename T>
FiniteMetric<T> shortest_path_metric(std::vector<T> objects, const DistanceFn<T>& f)
{
    const std::size_t n = objects.size();
    require(n >= 1, "shortest-path metric needs at least one object");
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        require(f(objects[i], objects[i]) == 0.0, "f must be zero on the diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            require(!(objects[i] == objects[j]), "objects must be pairwise distinguishable");
            const double fij = f(objects[i], objects[j]);
            const double fji = f(objects[j], objects[i]);
            require(std::isfinite(fij) && fij > 0.0, "f must be finite and positive off the diagonal");
            require(std::abs(fij - fji) <= 1e-12 * std::max(1.0, std::abs(fij)), "f must be symmetric");
            dist[i * n + j] = j > i ? fij : dist[j * n + i];
        }
    }
    // Repeat until a full pass changes nothing, so that the stored table
    // satisfies d(i,j) <= d(i,k) + d(k,j) in floating point, not just in
    // exact arithmetic.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t via = 0; via < n; ++via)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double through = dist[i * n + via] + dist[via * n + j];
                    if (through < dist[i * n + j]) {
                        dist[i * n + j] = through;
                        changed = true;
                    }
                }
    }
    return FiniteMetric<T>(std::move(objects), std::move(dist));
}

} // namespace gmed
