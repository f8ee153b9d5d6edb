#pragma once

#include <cstdint>
#include <vector>

#include "gmed/ranking.hpp"
#include "gmed/rng.hpp"
#include "gmed/rotation.hpp"

namespace gmed {

/// n draws from Normal(mu, sigma).
std::vector<double> normal_reals(int n, double mu, double sigma, std::uint64_t seed);

/// Haar-uniform random rotation.
Rotation3 random_rotation(Engine& engine);

/// Uniformly random ranking of length m.
Ranking random_ranking(int m, Engine& engine);

/// Unit vector uniform on the sphere.
Vec3 random_axis(Engine& engine);

/// base * Exp(axis * angle) with axis uniform on the sphere and
/// angle ~ Normal(0, angle_sigma).
std::vector<Rotation3> perturbed_rotations(int n, const Rotation3& base, double angle_sigma, std::uint64_t seed);

/// base with exactly swap_count uniformly placed adjacent transpositions applied.
std::vector<Ranking> perturbed_rankings(int n, const Ranking& base, int swap_count, std::uint64_t seed);

/// min(pi, 3 * angle_sigma + pi/2).
double far_rotation_angle(double angle_sigma);

/// Centre of the rotation outlier cluster: base composed with a rotation of
/// angle min(pi, 3 * angle_sigma + pi/2) about a random axis.
Rotation3 far_rotation(const Rotation3& base, double angle_sigma, std::uint64_t seed);

/// Centre of the ranking outlier cluster: the reverse of base.
inline Ranking far_ranking(const Ranking& base) { return reversed(base); }

/// Outliers scattered around far_base with the same noise model as inliers.
std::vector<Rotation3> outlier_rotations(int n, const Rotation3& far_base, double angle_sigma, std::uint64_t seed);
std::vector<Ranking> outlier_rankings(int n, const Ranking& far_base, int swap_count, std::uint64_t seed);

} // namespace gmed
