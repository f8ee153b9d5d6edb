#include "gmed/rotation.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace gmed {

namespace {

Vec3 vee_antisymmetric(const Mat3& m)
{
    return Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
}

// Angle of a rotation matrix via atan2(sin, cos). Both components are read off
// the matrix directly, which keeps the result accurate near 0 and near pi.
double rotation_angle(const Mat3& m)
{
    const double c = std::clamp((m.trace() - 1.0) * 0.5, -1.0, 1.0);
    const double s = 0.5 * vee_antisymmetric(m).norm();
    return std::atan2(s, c);
}

Mat3 exp_map(const Vec3& omega)
{
    const double theta = omega.norm();
    const Mat3 k = hat(omega);
    if (theta < 1e-8) return Mat3::Identity() + k + 0.5 * k * k;
    const double a = std::sin(theta) / theta;
    const double b = (1.0 - std::cos(theta)) / (theta * theta);
    return Mat3::Identity() + a * k + b * k * k;
}

Vec3 log_map(const Mat3& m)
{
    const double theta = rotation_angle(m);
    const Vec3 v = vee_antisymmetric(m);
    if (theta < 1e-8) return 0.5 * v;
    if (theta < std::numbers::pi - 1e-4) return theta / (2.0 * std::sin(theta)) * v;

    // Near pi: (m + m^T)/2 = cos(theta) I + (1 - cos(theta)) a a^T.
    const double c = std::cos(theta);
    const Mat3 aat = (0.5 * (m + m.transpose()) - c * Mat3::Identity()) / (1.0 - c);
    Eigen::Index col = 0;
    aat.diagonal().maxCoeff(&col);
    Vec3 axis = aat.col(col) / std::sqrt(std::max(aat(col, col), 1e-300));
    axis.normalize();
    if (axis.dot(v) < 0.0) axis = -axis;
    return theta * axis;
}

} // namespace

Mat3 hat(const Vec3& v)
{
    Mat3 k;
    k << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
    return k;
}

bool is_rotation(const Mat3& m, double tol)
{
    if (!m.allFinite()) return false;
    const Mat3 gram = m.transpose() * m - Mat3::Identity();
    return gram.cwiseAbs().maxCoeff() <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

Rotation3::Rotation3(const Mat3& m) : m_(m)
{
    require(is_rotation(m), "matrix is not a rotation (orthonormal with det +1 within 1e-9)");
}

Rotation3 Rotation3::from_axis_angle(const Vec3& axis, double angle)
{
    const double norm = axis.norm();
    require(norm > 0.0 && std::isfinite(norm), "rotation axis must be nonzero");
    return exp(axis / norm * angle);
}

Rotation3 Rotation3::exp(const Vec3& omega)
{
    require(omega.allFinite(), "rotation vector must be finite");
    return project(exp_map(omega));
}

Rotation3 Rotation3::project(const Mat3& m)
{
    require(m.allFinite(), "cannot project a non-finite matrix");
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 d = Mat3::Identity();
    if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0) d(2, 2) = -1.0;
    return Rotation3(svd.matrixU() * d * svd.matrixV().transpose(), Unchecked{});
}

Vec3 Rotation3::log() const { return log_map(m_); }

double angular_distance(const Rotation3& a, const Rotation3& b)
{
    return rotation_angle(a.matrix().transpose() * b.matrix());
}

DistanceFn<Rotation3> angular_metric()
{
    return DistanceFn<Rotation3>{[](const Rotation3& a, const Rotation3& b) { return angular_distance(a, b); },
                                 true};
}

Vec3 relative_log(const Rotation3& a, const Rotation3& b)
{
    return log_map(a.matrix().transpose() * b.matrix());
}

Rotation3 geodesic_interpolate(const Rotation3& a, const Rotation3& b, double w)
{
    if (w == 0.0) return a;
    if (w == 1.0) return b;
    const Vec3 step = relative_log(a, b);
    return a * Rotation3::exp(w * step);
}

} // namespace gmed
