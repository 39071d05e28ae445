#pragma once

#include <functional>

#include "gmech/rotation.hpp"
#include "gmech/sphere.hpp"

// The trivial (pair) groupoid S^2 x SO(3) x S^2. An element g = (x, a, y)
// is an arrow from y to x carrying an internal rotation a; arrows compose
// like matrix products: (x,a,y)(y,b,z) = (x, ab, z). Source and target are
//   source(x,a,y) = y,   target(x,a,y) = x,
// so the anchor conventions match left-to-right composition.

namespace gmech {

class GroupoidElement {
public:
    GroupoidElement(const SpherePoint& target, const Rotation& rot, const SpherePoint& source)
        : target_(target), rot_(rot), source_(source) {}

    const SpherePoint& source() const { return source_; }
    const SpherePoint& target() const { return target_; }
    const Rotation& rotation() const { return rot_; }

    GroupoidElement inverse() const {
        return GroupoidElement(source_, rot_.inverse(), target_);
    }

private:
    SpherePoint target_;
    Rotation rot_;
    SpherePoint source_;
};

inline GroupoidElement unit(const SpherePoint& p) {
    return GroupoidElement(p, Rotation::identity(), p);
}

/// (x,a,y)(y,b,z) = (x, ab, z). Throws NonComposable unless
/// source(g) and target(h) coincide (1e-9 on unit vectors).
GroupoidElement multiply(const GroupoidElement& g, const GroupoidElement& h);

/// True iff source(g) = target(g) = p; such arrows form a group ~ SO(3).
bool isotropy_contains(const SpherePoint& p, const GroupoidElement& g);

/// Bisection sigma(p) = (phi(p), a_of(p), p) with phi a fixed rotation of
/// the sphere, so beta o sigma = phi is invertible by construction.
class Bisection {
public:
    using RotationField = std::function<Rotation(const SpherePoint&)>;

    Bisection(const Rotation& phi, RotationField a_of)
        : phi_(phi), a_of_(std::move(a_of)) {}

    /// Unit bisection: phi = id, a_of == Id. Left/right translation by it
    /// is the identity on the groupoid.
    static Bisection unit();

    SpherePoint apply_phi(const SpherePoint& p) const {
        return SpherePoint(phi_ * p.position(), p.radius());
    }
    SpherePoint apply_phi_inverse(const SpherePoint& p) const {
        return SpherePoint(phi_.inverse() * p.position(), p.radius());
    }

    GroupoidElement operator()(const SpherePoint& p) const {
        return GroupoidElement(apply_phi(p), a_of_(p), p);
    }

    /// Pointwise inverse: tau with L_tau o L_sigma = id.
    Bisection inverse() const;

private:
    Rotation phi_;
    RotationField a_of_;
};

/// L_sigma(g) = sigma(target(g)) . g  (preserves the source).
GroupoidElement left_translate(const Bisection& sigma, const GroupoidElement& g);

/// R_sigma(g) = g . sigma(phi^-1(source(g)))  (preserves the target).
GroupoidElement right_translate(const Bisection& sigma, const GroupoidElement& g);

/// Adjoint action on the isotropy algebra: Ad_(x,a,y) X = a X, carrying an
/// isotropy vector at source(g) to one at target(g). Matrix form:
/// hat(Ad(g,X)) = a hat(X) a^T.
Vec3 Ad(const GroupoidElement& g, const Vec3& X);

/// Coadjoint action, defined by <Ad_star(g,xi), X> = <xi, Ad(g^-1, X)>.
/// With the Euclidean identification this is again xi -> a xi.
Vec3 Ad_star(const GroupoidElement& g, const Vec3& xi);

} // namespace gmech
