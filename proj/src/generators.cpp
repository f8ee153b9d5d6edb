#include "gmed/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gmed/error.hpp"

namespace gmed {

std::vector<double> normal_reals(int n, double mu, double sigma, std::uint64_t seed)
{
    require(n >= 1, "n must be >= 1");
    require(sigma >= 0.0 && std::isfinite(sigma) && std::isfinite(mu), "sigma must be finite and >= 0");
    Engine engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = mu + sigma * normal(engine);
    return values;
}

Vec3 random_axis(Engine& engine)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        Vec3 v(normal(engine), normal(engine), normal(engine));
        const double norm = v.norm();
        if (norm > 1e-12) return v / norm;
    }
}

Rotation3 random_rotation(Engine& engine)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::Quaterniond q;
    do {
        q = Eigen::Quaterniond(normal(engine), normal(engine), normal(engine), normal(engine));
    } while (q.norm() < 1e-12);
    q.normalize();
    return Rotation3::project(q.toRotationMatrix());
}

Ranking random_ranking(int m, Engine& engine)
{
    require(m >= 1, "ranking length must be >= 1");
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    // Fisher-Yates with an explicit distribution; std::shuffle's draw pattern
    // is implementation-defined.
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(perm[i], perm[pick(engine)]);
    }
    return Ranking(std::move(perm));
}

std::vector<Rotation3> perturbed_rotations(int n, const Rotation3& base, double angle_sigma, std::uint64_t seed)
{
    require(n >= 1, "n must be >= 1");
    require(angle_sigma >= 0.0 && std::isfinite(angle_sigma), "angle sigma must be finite and >= 0");
    Engine engine = make_engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Rotation3> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Vec3 axis = random_axis(engine);
        const double angle = angle_sigma * normal(engine);
        if (angle == 0.0) {
            out.push_back(base);
        } else {
            out.push_back(base * Rotation3::from_axis_angle(axis, angle));
        }
    }
    return out;
}

std::vector<Ranking> perturbed_rankings(int n, const Ranking& base, int swap_count, std::uint64_t seed)
{
    require(n >= 1, "n must be >= 1");
    require(swap_count >= 0, "swap count must be >= 0");
    require(swap_count == 0 || base.size() >= 2, "adjacent swaps need rankings of length >= 2");
    Engine engine = make_engine(seed);
    std::vector<Ranking> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Ranking r = base;
        for (int s = 0; s < swap_count; ++s) {
            std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(base.size()) - 2);
            r = swap_adjacent(r, pick(engine));
        }
        out.push_back(std::move(r));
    }
    return out;
}

double far_rotation_angle(double angle_sigma)
{
    return std::min(std::numbers::pi, 3.0 * angle_sigma + std::numbers::pi / 2.0);
}

Rotation3 far_rotation(const Rotation3& base, double angle_sigma, std::uint64_t seed)
{
    require(angle_sigma >= 0.0 && std::isfinite(angle_sigma), "angle sigma must be finite and >= 0");
    Engine engine = make_engine(seed);
    return base * Rotation3::from_axis_angle(random_axis(engine), far_rotation_angle(angle_sigma));
}

std::vector<Rotation3> outlier_rotations(int n, const Rotation3& far_base, double angle_sigma, std::uint64_t seed)
{
    return perturbed_rotations(n, far_base, angle_sigma, seed);
}

std::vector<Ranking> outlier_rankings(int n, const Ranking& far_base, int swap_count, std::uint64_t seed)
{
    return perturbed_rankings(n, far_base, swap_count, seed);
}

} // namespace gmed
