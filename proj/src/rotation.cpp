#include "equisph/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equisph {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a == kTwoPi) a = 0.0;
    return a;
}

// sin(beta) below this is treated as the gimbal case
constexpr double kGimbalEps = 1e-12;

}  // namespace

Mat3 mat3_identity() {
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
    return r;
}

Vec3 mat3_apply(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

Mat3 axis_angle_matrix(const Vec3& axis, double angle) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (n == 0.0) throw std::invalid_argument("axis_angle_matrix: zero axis");
    double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
    double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
             {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
             {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

double rotation_geodesic_angle(const Mat3& a, const Mat3& b) {
    Mat3 rel = mat3_mul(a, mat3_transpose(b));
    double tr = rel[0][0] + rel[1][1] + rel[2][2];
    double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

RotationZYZ::RotationZYZ(double alpha, double beta, double gamma) {
    if (!(beta >= -1e-12 && beta <= std::numbers::pi + 1e-12))
        throw std::invalid_argument("RotationZYZ: beta outside [0, pi]");
    beta_ = std::clamp(beta, 0.0, std::numbers::pi);
    if (std::sin(beta_) < kGimbalEps) {
        // fold gamma into alpha, unique representative
        alpha_ = wrap_2pi(beta_ < 1.0 ? alpha + gamma : alpha - gamma);
        gamma_ = 0.0;
    } else {
        alpha_ = wrap_2pi(alpha);
        gamma_ = wrap_2pi(gamma);
    }
}

Mat3 RotationZYZ::matrix() const {
    const double ca = std::cos(alpha_), sa = std::sin(alpha_);
    const double cb = std::cos(beta_), sb = std::sin(beta_);
    const double cg = std::cos(gamma_), sg = std::sin(gamma_);
    // Rz(alpha) * Ry(beta) * Rz(gamma)
    return {{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
             {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
             {-sb * cg, sb * sg, cb}}};
}

RotationZYZ RotationZYZ::from_matrix(const Mat3& m) {
    double cb = std::clamp(m[2][2], -1.0, 1.0);
    double beta = std::acos(cb);
    double sb = std::sin(beta);
    if (sb < kGimbalEps) {
        // pure z-rotation (beta = 0) or z-rotation times Ry(pi)
        double alpha = std::atan2(m[1][0], m[0][0]);
        if (cb < 0.0) alpha = std::atan2(-m[1][0], -m[0][0]);
        return {wrap_2pi(alpha), beta < 1.0 ? 0.0 : std::numbers::pi, 0.0};
    }
    double alpha = std::atan2(m[1][2], m[0][2]);
    double gamma = std::atan2(m[2][1], -m[2][0]);
    return {wrap_2pi(alpha), beta, wrap_2pi(gamma)};
}

RotationZYZ RotationZYZ::inverse() const {
    return from_matrix(mat3_transpose(matrix()));
}

RotationZYZ rotation_compose(const RotationZYZ& g1, const RotationZYZ& g2) {
    return RotationZYZ::from_matrix(mat3_mul(g1.matrix(), g2.matrix()));
}

}  // namespace equisph
