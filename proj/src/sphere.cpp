#include "gmech/sphere.hpp"

#include <cmath>
#include <sstream>

namespace gmech {

namespace {
constexpr double kAntipodalMargin = 1e-6;

void check_radii(const SpherePoint& p, const SpherePoint& q) {
    const double r = std::max(p.radius(), q.radius());
    if (std::abs(p.radius() - q.radius()) > 1e-9 * r) {
        std::ostringstream os;
        os << "radius mismatch: " << p.radius() << " vs " << q.radius();
        throw RadiusMismatch(os.str());
    }
}

/// Separation angle in [0, pi] from unit vectors.
double angle_between(const SpherePoint& p, const SpherePoint& q) {
    const Vec3 a = p.unit(), b = q.unit();
    return std::atan2(a.cross(b).norm(), a.dot(b));
}
} // namespace

SpherePoint::SpherePoint(const Vec3& p, double radius) : R_(radius) {
    if (!(radius > 0.0))
        throw OffSphere("SpherePoint: radius must be positive");
    const double n = p.norm();
    if (std::abs(n - radius) > 1e-9 * radius) {
        std::ostringstream os;
        os << "SpherePoint: |p| = " << n << " is off the sphere of radius " << radius;
        throw OffSphere(os.str());
    }
    p_ = p * (radius / n);
}

SpherePoint SpherePoint::from_latlon_deg(double lat_deg, double lon_deg, double radius) {
    const double lat = lat_deg * M_PI / 180.0;
    const double lon = lon_deg * M_PI / 180.0;
    const Vec3 u(std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat));
    return SpherePoint(u * radius, radius);
}

bool same_point(const SpherePoint& p, const SpherePoint& q) {
    const double r = std::max(p.radius(), q.radius());
    if (std::abs(p.radius() - q.radius()) > 1e-9 * r)
        return false;
    return (p.unit() - q.unit()).norm() <= 1e-9;
}

SphereTangent project_tangent(const SpherePoint& p, const Vec3& w) {
    const Vec3 n = p.unit();
    return SphereTangent{p, w - w.dot(n) * n};
}

SpherePoint exp_map(const SpherePoint& p, const SphereTangent& v) {
    const double speed = v.v.norm();
    if (speed == 0.0)
        return p;
    const double R = p.radius();
    const double theta = speed / R;
    const Vec3 dir = v.v / speed;
    const Vec3 q = std::cos(theta) * p.position() + (std::sin(theta) * R) * dir;
    return SpherePoint(q, R);
}

SphereTangent log_map(const SpherePoint& p, const SpherePoint& q) {
    check_radii(p, q);
    const double R = p.radius();
    const double phi = angle_between(p, q);
    if (phi >= M_PI - kAntipodalMargin)
        throw AntipodalPoints("log_map: points are antipodal, geodesic not unique");
    if (phi < 1e-14)
        return SphereTangent{p, Vec3::Zero()};
    const Vec3 n = p.unit();
    const Vec3 u = q.unit() - std::cos(phi) * n; // |u| = sin(phi)
    return SphereTangent{p, (R * phi / std::sin(phi)) * u};
}

double geodesic_distance(const SpherePoint& p, const SpherePoint& q) {
    check_radii(p, q);
    return p.radius() * angle_between(p, q);
}

SphereTangent parallel_transport(const SpherePoint& p, const SpherePoint& q,
                                 const SphereTangent& v) {
    check_radii(p, q);
    const double phi = angle_between(p, q);
    if (phi >= M_PI - kAntipodalMargin)
        throw AntipodalPoints("parallel_transport: points are antipodal");
    if (phi < 1e-14)
        return SphereTangent{q, v.v};
    // rotate by phi about the geodesic's binormal; Rodrigues applied directly
    const Vec3 axis = p.unit().cross(q.unit()).normalized();
    const double c = std::cos(phi), s = std::sin(phi);
    const Vec3 w = c * v.v + s * axis.cross(v.v) + (1.0 - c) * axis.dot(v.v) * axis;
    // kill the radial roundoff so the tangency invariant survives long chains
    return project_tangent(q, w);
}

} // namespace gmech
