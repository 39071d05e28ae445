#include "gmech/algebra.hpp"

#include <cmath>
#include <sstream>

namespace gmech {

Mat3 hat(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
        -v.y(), v.x(), 0.0;
    return m;
}

Vec3 vee(const Mat3& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const Mat3 sym = 0.5 * (m + m.transpose());
    if (sym.cwiseAbs().maxCoeff() > 1e-12 * scale) {
        std::ostringstream os;
        os << "vee: matrix is not skew-symmetric (|sym part| = "
           << sym.cwiseAbs().maxCoeff() << ")";
        throw NotSkewSymmetric(os.str());
    }
    return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

InertiaTensor::InertiaTensor(const Mat3& I) {
    const double scale = std::max(1.0, I.cwiseAbs().maxCoeff());
    if ((I - I.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NotPositiveDefinite("InertiaTensor: matrix is not symmetric");
    I_ = 0.5 * (I + I.transpose()); // exact symmetry for downstream checks

    Eigen::SelfAdjointEigenSolver<Mat3> es(I_);
    if (es.eigenvalues().minCoeff() <= 1e-12 * I_.trace())
        throw NotPositiveDefinite("InertiaTensor: matrix is not positive definite");

    llt_.compute(I_);
}

InertiaTensor InertiaTensor::diagonal(double a, double b, double c) {
    Mat3 I = Mat3::Zero();
    I(0, 0) = a;
    I(1, 1) = b;
    I(2, 2) = c;
    return InertiaTensor(I);
}

Mat3 InertiaTensor::inverse() const {
    return llt_.solve(Mat3::Identity());
}

double variational_derivative_check(
    const std::function<double(const Eigen::VectorXd&)>& l,
    const Eigen::VectorXd& xi, const Eigen::VectorXd& analytic_grad) {
    double worst = 0.0;
    Eigen::VectorXd probe = xi;
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        const double h = 1e-5 * (1.0 + std::abs(xi[i]));
        probe[i] = xi[i] + h;
        const double fp = l(probe);
        probe[i] = xi[i] - h;
        const double fm = l(probe);
        probe[i] = xi[i];
        const double fd = (fp - fm) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - analytic_grad[i]));
    }
    return worst;
}

} // namespace gmech
