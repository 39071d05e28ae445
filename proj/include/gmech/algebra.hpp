#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <functional>

#include "gmech/errors.hpp"

// The Lie algebra so(3) identified with R^3, its dual identified through the
// Euclidean inner product, and the handful of bilinear operators every
// reduced equation of motion in this library is written with.
//
// Sign conventions (fixed here, used by every right-hand side downstream):
//
//   bracket    [xi,eta]  = xi x eta
//   ad_xi eta  = [xi,eta]                       => ad(xi,eta)   = xi x eta
//   ad*_xi mu  : <ad*_xi mu, eta> = <mu,[xi,eta]> => ad_star(xi,mu) = mu x xi
//   b diamond a: <b<>a, xi> = <b, -xi x a>        => diamond(b,a)   = b x a
//
// The reduced rotational equations are anchored to the classical rigid body
//
//   dM/dt = M x Omega   (equivalently  dM/dt + Omega x M = 0,  M = I Omega),
//
// which in the operators above reads  d/dt(dl/dxi) = ad_star(xi, dl/dxi).
// Advected quantities follow  da/dt = -xi x a  and source the momentum
// equation through  diamond(dl/da, a).  All sign choices live in this file;
// dynamics and field solvers use these operators and never re-derive signs.

namespace gmech {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Element of so(3) ~= R^3 (also used, via the dual pairing, for momenta).
using AlgebraVector = Vec3;

/// hat: R^3 -> so(3) matrix realization, hat(v) * w == v x w.
Mat3 hat(const Vec3& v);

/// vee: inverse of hat. Throws NotSkewSymmetric if the symmetric part of m
/// exceeds 1e-12 * max(1, |m|_inf) -- a corrupted input, not roundoff.
Vec3 vee(const Mat3& m);

/// Lie bracket ad_xi eta = [xi, eta] = xi x eta.
inline Vec3 ad(const Vec3& xi, const Vec3& eta) { return xi.cross(eta); }

/// Coadjoint operator: <ad_star(xi,mu), eta> = <mu, ad(xi,eta)> for all eta.
inline Vec3 ad_star(const Vec3& xi, const Vec3& mu) { return mu.cross(xi); }

/// Diamond operator: <diamond(b,a), xi> = <b, -xi x a> for all xi.
inline Vec3 diamond(const Vec3& b, const Vec3& a) { return b.cross(a); }

/// Symmetric positive-definite inertia tensor with a cached Cholesky
/// factorization for applying I^-1.
class InertiaTensor {
public:
    /// Construction validates symmetry (to 1e-12 relative) and positive
    /// definiteness (eigenvalues > 1e-12 * trace). Non-SPD input is rejected,
    /// never regularized.
    explicit InertiaTensor(const Mat3& I);

    static InertiaTensor diagonal(double a, double b, double c);
    static InertiaTensor identity() { return diagonal(1.0, 1.0, 1.0); }

    const Mat3& matrix() const { return I_; }

    /// M = I * Omega
    Vec3 apply(const Vec3& omega) const { return I_ * omega; }

    /// Omega = I^-1 * M via the cached factorization.
    Vec3 solve(const Vec3& m) const { return llt_.solve(m); }

    Mat3 inverse() const;

private:
    Mat3 I_;
    Eigen::LLT<Mat3> llt_;
};

/// Body angular momentum M = I * Omega.
inline Vec3 body_momentum(const InertiaTensor& I, const Vec3& omega) {
    return I.apply(omega);
}

/// Max componentwise deviation between the central-difference gradient of l
/// at xi and the supplied analytic gradient. Step h_i = 1e-5 * (1 + |xi_i|).
double variational_derivative_check(
    const std::function<double(const Eigen::VectorXd&)>& l,
    const Eigen::VectorXd& xi, const Eigen::VectorXd& analytic_grad);

} // namespace gmech
