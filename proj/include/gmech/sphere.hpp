#pragma once

#include "gmech/algebra.hpp"
#include "gmech/errors.hpp"

namespace gmech {

/// Point on the sphere of radius R (embedded coordinates, micrometres).
/// The constructor renormalizes onto the sphere but rejects input that is
/// further than 1e-9 * R off it.
class SpherePoint {
public:
    SpherePoint(const Vec3& p, double radius);

    /// Latitude/longitude in degrees (biologist-facing convention).
    static SpherePoint from_latlon_deg(double lat_deg, double lon_deg, double radius);

    const Vec3& position() const { return p_; }
    double radius() const { return R_; }
    Vec3 unit() const { return p_ / R_; }

private:
    Vec3 p_;
    double R_;
};

/// Tangent vector at a base point (micrometres / minute).
struct SphereTangent {
    SpherePoint base;
    Vec3 v;

    double norm() const { return v.norm(); }
};

/// True when the two base points coincide within 1e-9 on unit vectors.
bool same_point(const SpherePoint& p, const SpherePoint& q);

/// Orthogonal projection of an ambient vector onto T_p S^2. Idempotent.
SphereTangent project_tangent(const SpherePoint& p, const Vec3& w);

/// Great-circle flow from p with initial velocity v for unit time.
SpherePoint exp_map(const SpherePoint& p, const SphereTangent& v);

/// Inverse of exp_map; |log_map(p,q).v| equals the geodesic distance.
/// Throws AntipodalPoints once the separation angle reaches pi - 1e-6.
SphereTangent log_map(const SpherePoint& p, const SpherePoint& q);

/// R * atan2(|p x q|, <p,q>) on unit vectors; stable near 0 and pi.
/// Throws RadiusMismatch when the radii differ by more than 1e-9 relative.
double geodesic_distance(const SpherePoint& p, const SpherePoint& q);

/// Levi-Civita parallel transport of v along the minimal geodesic p -> q.
SphereTangent parallel_transport(const SpherePoint& p, const SpherePoint& q,
                                 const SphereTangent& v);

} // namespace gmech
