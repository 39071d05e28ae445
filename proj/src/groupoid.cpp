#include "gmech/groupoid.hpp"

#include <sstream>

namespace gmech {

GroupoidElement multiply(const GroupoidElement& g, const GroupoidElement& h) {
    if (!same_point(g.source(), h.target())) {
        std::ostringstream os;
        os << "multiply: arrows do not chain, |source(g) - target(h)| = "
           << (g.source().unit() - h.target().unit()).norm() << " on unit vectors";
        throw NonComposable(os.str());
    }
    return GroupoidElement(g.target(), g.rotation() * h.rotation(), h.source());
}

bool isotropy_contains(const SpherePoint& p, const GroupoidElement& g) {
    return same_point(g.source(), p) && same_point(g.target(), p);
}

Bisection Bisection::unit() {
    return Bisection(Rotation::identity(),
                     [](const SpherePoint&) { return Rotation::identity(); });
}

Bisection Bisection::inverse() const {
    const Rotation phi_inv = phi_.inverse();
    const RotationField a = a_of_;
    return Bisection(phi_inv, [phi_inv, a](const SpherePoint& p) {
        return a(SpherePoint(phi_inv * p.position(), p.radius())).inverse();
    });
}

GroupoidElement left_translate(const Bisection& sigma, const GroupoidElement& g) {
    return multiply(sigma(g.target()), g);
}

GroupoidElement right_translate(const Bisection& sigma, const GroupoidElement& g) {
    return multiply(g, sigma(sigma.apply_phi_inverse(g.source())));
}

Vec3 Ad(const GroupoidElement& g, const Vec3& X) {
    return g.rotation() * X;
}

Vec3 Ad_star(const GroupoidElement& g, const Vec3& xi) {
    return g.rotation() * xi;
}

} // namespace gmech
