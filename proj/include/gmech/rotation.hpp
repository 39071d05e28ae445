#pragma once

#include "gmech/algebra.hpp"
#include "gmech/errors.hpp"

namespace gmech {

/// Element of SO(3), stored as a 3x3 matrix. Construction validates
/// orthogonality (|R^T R - Id|_F <= 1e-10) and det = +1. Products
/// re-orthonormalize via polar projection once drift crosses the same
/// threshold, so long chains of multiplications stay on the group.
class Rotation {
public:
    Rotation() : R_(Mat3::Identity()) {}
    explicit Rotation(const Mat3& R);

    static Rotation identity() { return Rotation(); }

    /// Rodrigues formula, exact for all angles. exp(hat(w)).
    static Rotation exp(const Vec3& w);

    /// Axis must be nonzero; angle in radians.
    static Rotation axis_angle(const Vec3& axis, double angle);

    /// Principal logarithm as a vector: exp(log(R)) == R.
    Vec3 log() const;

    const Mat3& matrix() const { return R_; }

    Rotation transpose() const;
    Rotation inverse() const { return transpose(); }

    Rotation operator*(const Rotation& other) const;
    Vec3 operator*(const Vec3& v) const { return R_ * v; }

    double orthogonality_defect() const;

    bool is_approx(const Rotation& other, double tol = 1e-12) const {
        return (R_ - other.R_).cwiseAbs().maxCoeff() <= tol;
    }

    /// Nearest rotation in the Frobenius sense (polar factor).
    static Mat3 polar_project(const Mat3& M);

private:
    struct unchecked_t {};
    Rotation(const Mat3& R, unchecked_t) : R_(R) {}

    Mat3 R_;
};

} // namespace gmech
