#pragma once

#include <array>

namespace equisph {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_transpose(const Mat3& m);
Vec3 mat3_apply(const Mat3& m, const Vec3& v);
Mat3 axis_angle_matrix(const Vec3& axis, double angle);
double rotation_geodesic_angle(const Mat3& a, const Mat3& b);

/// ZYZ Euler triple with canonical ranges alpha, gamma in [0, 2*pi) and
/// beta in [0, pi]. The induced matrix is Rz(alpha) * Ry(beta) * Rz(gamma).
/// At the gimbal degeneracies beta in {0, pi} the representative folds
/// gamma into alpha and stores gamma = 0.
class RotationZYZ {
  public:
    RotationZYZ(double alpha, double beta, double gamma);
    static RotationZYZ identity() { return {0.0, 0.0, 0.0}; }
    static RotationZYZ from_matrix(const Mat3& m);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    Mat3 matrix() const;
    RotationZYZ inverse() const;

  private:
    double alpha_, beta_, gamma_;
};

RotationZYZ rotation_compose(const RotationZYZ& g1, const RotationZYZ& g2);

}  // namespace equisph
