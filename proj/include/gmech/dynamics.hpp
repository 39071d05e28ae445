#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gmech/algebra.hpp"
#include "gmech/rotation.hpp"
#include "gmech/sphere.hpp"

// Time integration of the reduced rotational systems: the free rigid body,
// the advected-quantity extension, the forced equation, and the coupled
// sphere-motion + internal-rotation system on S^2 x SO(3) x S^2, followed by
// reconstruction of the internal rotation path. Fixed-step RK4 throughout;
// determinism over adaptivity.

namespace gmech {

using StateRhs = std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

/// Classical RK4 update. Throws IntegrationDiverged when the result is not
/// finite.
Eigen::VectorXd rk4_step(const StateRhs& f, const Eigen::VectorXd& s, double t, double dt);

// -- states -----------------------------------------------------------------

struct RigidBodyState {
    Vec3 M;          // body angular momentum
    InertiaTensor I;
};

struct AdvectedState {
    Vec3 mu; // rotational momentum
    Vec3 a;  // advected quantity in V* = R^3
};

struct GroupoidEPParams {
    InertiaTensor I;
    double alpha; // locomotion weight
};

struct GroupoidEPState {
    SpherePoint x;     // position on the sphere
    SphereTangent X;   // migration velocity at x
    Rotation attitude; // reconstructed internal rotation
    Vec3 eta;          // internal angular velocity
};

// -- right-hand sides ---------------------------------------------------------

/// dM/dt = M x Omega with Omega = I^-1 M (the classical Euler equations).
Vec3 rigid_body_rhs(const RigidBodyState& s);

/// Gradient of the Lagrangian in the advected variable, dl/da.
using PotentialGradient = std::function<Vec3(const Vec3&)>;

/// Momentum and advection rates with xi = I^-1 mu:
///   dmu/dt = ad_star(xi, mu) + diamond(dl_da(a), a),   da/dt = -xi x a.
/// dl_da == 0 reduces exactly to rigid_body_rhs.
std::pair<Vec3, Vec3> advected_ep_rhs(const AdvectedState& s, const InertiaTensor& I,
                                      const PotentialGradient& dl_da);

/// Body-frame external force (already pulled back by the caller).
using BodyForce = std::function<Vec3(double)>;

/// dM/dt = M x Omega + F_body(t).
Vec3 forced_ep_rhs(const RigidBodyState& s, double t, const BodyForce& F_body);

struct GroupoidEPRates {
    Vec3 dx;   // = X
    Vec3 dX;   // extrinsic geodesic acceleration, re-projected by the integrator
    Vec3 deta; // = I^-1 (I eta x eta)
};

/// The two blocks decouple: geodesic motion on the sphere and the free
/// rigid body in the internal variable.
GroupoidEPRates trivial_ep_rhs(const GroupoidEPState& s, const GroupoidEPParams& p);

// -- trajectories -------------------------------------------------------------

/// Uniform-grid trajectory with a per-step invariant log.
struct Trajectory {
    struct Invariants {
        double energy = 0.0;
        double casimir = 0.0;
        double speed = 0.0;
    };

    std::vector<double> times;
    std::vector<std::string> columns; // names of the state columns
    std::vector<Eigen::VectorXd> states;
    std::vector<Invariants> invariants;

    std::size_t size() const { return times.size(); }

    double max_rel_drift_energy() const;
    double max_rel_drift_casimir() const;
    double max_rel_drift_speed() const;

    /// Header `t,<state columns>,energy,casimir,speed`; one row per step.
    void write_csv(std::ostream& os) const;
    void write_csv(const std::string& path) const;
};

Trajectory integrate_rigid_body(const RigidBodyState& s0, double dt, int steps);

/// Optional potential V(a) with dl_da = dV/da; when present the logged
/// energy is kinetic - V(a) (conserved), otherwise kinetic only.
using Potential = std::function<double(const Vec3&)>;

Trajectory integrate_advected(const AdvectedState& s0, const InertiaTensor& I,
                              const PotentialGradient& dl_da, double dt, int steps,
                              const Potential& V = nullptr);

Trajectory integrate_forced(const RigidBodyState& s0, const BodyForce& F_body, double dt,
                            int steps);

struct TrivialEPResult {
    Trajectory trajectory;             // columns x1..3, X1..3, eta1..3
    std::vector<Rotation> attitude;    // reconstructed internal rotation per step
};

/// Internally advances the momentum mu = I eta so that, for X0 = 0, the
/// internal block is arithmetic-for-arithmetic the free rigid body. The
/// attitude series is reconstructed with midpoint-interpolated eta samples.
TrivialEPResult integrate_trivial_ep(const GroupoidEPState& s0, const GroupoidEPParams& p,
                                     double dt, int steps);

/// R_{k+1} = R_k exp(hat(eta_mid[k]) dt) with eta_mid[k] the sample at
/// t_k + dt/2 (Rodrigues exponential; orthogonality maintained).
std::vector<Rotation> reconstruct_group_path(const std::vector<Vec3>& eta_mid,
                                             const Rotation& R0, double dt);

} // namespace gmech
