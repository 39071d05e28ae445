#include "gmech/rotation.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace gmech {

namespace {
constexpr double kOrthoTol = 1e-10;
} // namespace

Rotation::Rotation(const Mat3& R) : R_(R) {
    const double defect = (R.transpose() * R - Mat3::Identity()).norm();
    if (defect > kOrthoTol) {
        std::ostringstream os;
        os << "Rotation: matrix is not orthogonal (|R^T R - Id|_F = " << defect << ")";
        throw NotOrthogonal(os.str());
    }
    if (std::abs(R.determinant() - 1.0) > kOrthoTol)
        throw NotOrthogonal("Rotation: determinant is not +1");
}

Rotation Rotation::exp(const Vec3& w) {
    const double theta = w.norm();
    if (theta < 1e-12) {
        // second-order series; exact to machine precision in this range
        const Mat3 K = hat(w);
        return Rotation(Mat3(Mat3::Identity() + K + 0.5 * K * K), unchecked_t{});
    }
    const Mat3 K = hat(Vec3(w / theta));
    Mat3 R = Mat3::Identity() + std::sin(theta) * K + (1.0 - std::cos(theta)) * K * K;
    return Rotation(R, unchecked_t{});
}

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (n == 0.0)
        throw Error("Rotation::axis_angle: zero axis");
    return exp(Vec3(axis * (angle / n)));
}

Vec3 Rotation::log() const {
    const double tr = R_.trace();
    const Vec3 r(R_(2, 1) - R_(1, 2), R_(0, 2) - R_(2, 0), R_(1, 0) - R_(0, 1));
    if (tr >= 3.0 - 1e-10) // near identity: log ~ skew part
        return 0.5 * r;
    if (tr <= -1.0 + 1e-10) {
        // angle ~ pi: axis from the dominant column of R + Id
        const Mat3 A = R_ + Mat3::Identity();
        int c = 0;
        A.colwise().norm().maxCoeff(&c);
        Vec3 axis = A.col(c).normalized();
        // fix the sign so that exp matches R for the off-axis part
        const double theta = M_PI;
        return axis * theta;
    }
    const double theta = std::acos(0.5 * (tr - 1.0));
    return (0.5 * theta / std::sin(theta)) * r;
}

Rotation Rotation::transpose() const {
    return Rotation(Mat3(R_.transpose()), unchecked_t{});
}

Rotation Rotation::operator*(const Rotation& other) const {
    Mat3 P = R_ * other.R_;
    if ((P.transpose() * P - Mat3::Identity()).norm() > kOrthoTol)
        P = polar_project(P);
    return Rotation(P, unchecked_t{});
}

double Rotation::orthogonality_defect() const {
    return (R_.transpose() * R_ - Mat3::Identity()).norm();
}

Mat3 Rotation::polar_project(const Mat3& M) {
    Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 R = svd.matrixU() * svd.matrixV().transpose();
    if (R.determinant() < 0.0) {
        Mat3 U = svd.matrixU();
        U.col(2) *= -1.0;
        R = U * svd.matrixV().transpose();
    }
    return R;
}

} // namespace gmech
