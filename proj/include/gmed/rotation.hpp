#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "gmed/metric.hpp"

namespace gmed {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Element of SO(3). Construction validates orthonormality and det = +1.
class Rotation3
{
public:
    static constexpr double tolerance = 1e-9;

    explicit Rotation3(const Mat3& m);

    static Rotation3 identity() { return Rotation3(Mat3::Identity(), Unchecked{}); }
    /// Rotation by `angle` radians about `axis` (normalized internally).
    static Rotation3 from_axis_angle(const Vec3& axis, double angle);
    /// Exponential map of a rotation vector (axis * angle).
    static Rotation3 exp(const Vec3& omega);
    /// Nearest rotation in Frobenius norm (SVD projection).
    static Rotation3 project(const Mat3& m);

    const Mat3& matrix() const noexcept { return m_; }
    Rotation3 transpose() const { return Rotation3(m_.transpose(), Unchecked{}); }
    /// Rotation vector of this rotation, angle in [0, pi].
    Vec3 log() const;

    friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) { return project(a.m_ * b.m_); }
    friend bool operator==(const Rotation3& a, const Rotation3& b) { return a.m_ == b.m_; }

private:
    struct Unchecked {};
    Rotation3(const Mat3& m, Unchecked) : m_(m) {}

    Mat3 m_;
};

bool is_rotation(const Mat3& m, double tol = Rotation3::tolerance);

Mat3 hat(const Vec3& v);

/// Smallest rotation angle of a^T b, in [0, pi].
double angular_distance(const Rotation3& a, const Rotation3& b);

DistanceFn<Rotation3> angular_metric();

/// Log map of a^T b: the tangent vector at a pointing to b, with norm theta(a, b).
Vec3 relative_log(const Rotation3& a, const Rotation3& b);

/// Point at fraction w along the geodesic from a to b.
Rotation3 geodesic_interpolate(const Rotation3& a, const Rotation3& b, double w);

} // namespace gmed
