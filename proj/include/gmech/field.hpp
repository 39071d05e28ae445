#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "gmech/icosphere.hpp"
#include "gmech/kernels.hpp"
#include "gmech/sphere.hpp"

// Solver for the reduced field system on the icosphere,
//
//   d_t mu + L_X mu + ad*_eta mu = 0,      mu = I eta,
//   d_t m  + L_X m  + mu <> eta  = 0,      m  = alpha X,
//
// with semi-Lagrangian transport, a least-squares gradient operator, and an
// RK2 midpoint update. The internal so(3) index rides along as a flat bundle:
// so(3)-valued samples interpolate componentwise, tangent-valued samples are
// parallel-transported. Sampling is gradient-augmented (value plus half the
// one-ring Taylor correction), which removes the leading interpolation error
// of plain barycentric sampling.
//
// The transport term for tangent covectors is the full 1-form Lie derivative
//   (L_X m)(Y) = (grad_X m)(Y) + m(grad_Y X):
// backtrace + parallel transport realizes grad_X m, and the pointwise
// Jacobian-transpose term supplies m(grad_. X). Killing fields are steady
// states of the pure-advection m equation and the solver preserves them up
// to discretization error.

namespace gmech {

/// Precomputed mesh operators shared by all field operations: walking point
/// location, per-vertex tangent stencils, and constitutive matrices.
class FieldContext {
public:
    FieldContext(IcosphereMesh mesh, const InertiaTensor& I, double alpha);

    const IcosphereMesh& mesh() const { return mesh_; }
    const InertiaTensor& inertia() const { return I_; }
    double alpha() const { return alpha_; }

    int vertex_count() const { return mesh_.vertex_count(); }
    const Vec3& unit_vertex(int v) const { return unit_vertices_[v]; }
    kernels::ConstView3 unit_normals() const { return normals_.view(); }

    struct Sample {
        int face;
        std::array<double, 3> w; // normalized, sums to 1
    };

    /// Walking point location from start_face; unit_pt on the unit sphere.
    Sample locate(const Vec3& unit_pt, int start_face) const;

    /// Least-squares gradient stencil at vertex v: grad f = sum_j w[j] * (f[nbr[j]] - f[v]),
    /// w[j] tangent at v.
    struct Stencil {
        std::vector<int> nbr;
        std::vector<Vec3> w;
    };
    const Stencil& stencil(int v) const { return stencils_[v]; }

private:
    IcosphereMesh mesh_;
    InertiaTensor I_;
    double alpha_;
    std::vector<Vec3> unit_vertices_;
    kernels::Vec3Soa normals_;
    std::vector<Mat3> corner_inverse_; // per face, for barycentric-style weights
    std::vector<Stencil> stencils_;
};

/// Per-vertex unknowns. Constitutive consistency (mu = I eta, m = alpha X)
/// is restored after every step; X and m are tangent at their vertices.
struct FieldState {
    kernels::Vec3Soa eta, X, mu, m;
    std::vector<double> tracer; // optional passive scalar diagnostic
    double t = 0.0;
};

/// Uniform internal velocity eta0 plus a tangent velocity field X0(x)
/// (evaluated on unit vertices, projected to tangency); momenta filled from
/// the constitutive laws.
FieldState make_field_state(const FieldContext& ctx, const Vec3& eta0,
                            const std::function<Vec3(const Vec3&)>& X0 = nullptr);

/// Semi-Lagrangian transport derivative of an so(3)-valued field:
/// (f - f_backtraced)/dt_trace per vertex. Throws CFLViolation when
/// max|X| dt_trace exceeds half the minimum edge.
kernels::Vec3Soa lie_derivative_so3(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                    const kernels::Vec3Soa& f, double dt_trace);

/// Transport part of the derivative of a tangent field (backtrace, sample
/// with parallel transport, compare at the vertex).
kernels::Vec3Soa transport_derivative_tangent(const FieldContext& ctx,
                                              const kernels::Vec3Soa& X,
                                              const kernels::Vec3Soa& f, double dt_trace);

/// Full 1-form Lie derivative of a covector field m along X: transport part
/// plus the pointwise co-rotation term <m, grad_. X>.
kernels::Vec3Soa lie_derivative_covector(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                         const kernels::Vec3Soa& m, double dt_trace);

/// Pointwise directional derivative of an so(3)-valued field along Y built
/// from the gradient stencils; linear in Y_v. This is the operator whose
/// exact adjoint defines diamond_field.
kernels::Vec3Soa directional_derivative_so3(const FieldContext& ctx, const kernels::Vec3Soa& Y,
                                            const kernels::Vec3Soa& f);

/// Discrete diamond: the covector field D with
///   sum_v area_v <D_v, Y_v> = -sum_v area_v <mu_v, (D_Y eta)_v>
/// for every vector field Y, by pointwise adjointness of the gradient
/// stencils. D_v = -sum_j w_j <mu_v, eta_j - eta_v>.
kernels::Vec3Soa diamond_field(const FieldContext& ctx, const kernels::Vec3Soa& mu,
                               const kernels::Vec3Soa& eta);

/// Area-weighted pairing sum_v area_v <a_v, b_v>, fixed summation order.
double field_pairing(const FieldContext& ctx, const kernels::Vec3Soa& a,
                     const kernels::Vec3Soa& b);

/// One RK2 (midpoint) step of the coupled (mu, m) system; recomputes
/// eta = I^-1 mu and X = m / alpha, re-projects tangency, advances the
/// tracer by resampling. Throws CFLViolation / IntegrationDiverged.
void step_field(const FieldContext& ctx, FieldState& s, double dt);

/// Pure semi-Lagrangian resampling update for a passive scalar.
std::vector<double> advect_scalar(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                  const std::vector<double>& f, double dt);

/// Total internal energy 1/2 sum_v area_v (<I eta, eta> + alpha |X|^2),
/// fixed summation order.
double total_energy(const FieldContext& ctx, const FieldState& s);

double max_speed(const FieldState& s);

/// L2 norm sqrt(sum_v area_v |f_v|^2).
double field_l2(const FieldContext& ctx, const kernels::Vec3Soa& f);
double field_l2(const FieldContext& ctx, const std::vector<double>& f);

/// Snapshot CSV: vertex id, position, eta, X, mu, m (one row per vertex).
void write_field_csv(const FieldContext& ctx, const FieldState& s, std::ostream& os);
void write_field_csv(const FieldContext& ctx, const FieldState& s, const std::string& path);

} // namespace gmech
