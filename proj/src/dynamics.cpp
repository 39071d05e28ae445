#include "gmech/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace gmech {

Eigen::VectorXd rk4_step(const StateRhs& f, const Eigen::VectorXd& s, double t, double dt) {
    if (!(dt > 0.0))
        throw ValidationError("rk4_step: dt must be positive");
    const Eigen::VectorXd k1 = f(t, s);
    const Eigen::VectorXd k2 = f(t + 0.5 * dt, s + (0.5 * dt) * k1);
    const Eigen::VectorXd k3 = f(t + 0.5 * dt, s + (0.5 * dt) * k2);
    const Eigen::VectorXd k4 = f(t + dt, s + dt * k3);
    Eigen::VectorXd next = s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite())
        throw IntegrationDiverged("rk4_step: state is no longer finite");
    return next;
}

Vec3 rigid_body_rhs(const RigidBodyState& s) {
    const Vec3 omega = s.I.solve(s.M);
    return s.M.cross(omega);
}

std::pair<Vec3, Vec3> advected_ep_rhs(const AdvectedState& s, const InertiaTensor& I,
                                      const PotentialGradient& dl_da) {
    const Vec3 xi = I.solve(s.mu);
    Vec3 dmu = ad_star(xi, s.mu);
    if (dl_da)
        dmu += diamond(dl_da(s.a), s.a);
    const Vec3 da = -xi.cross(s.a);
    return {dmu, da};
}

Vec3 forced_ep_rhs(const RigidBodyState& s, double t, const BodyForce& F_body) {
    Vec3 dM = rigid_body_rhs(s);
    if (F_body)
        dM += F_body(t);
    return dM;
}

GroupoidEPRates trivial_ep_rhs(const GroupoidEPState& s, const GroupoidEPParams& p) {
    const double R = s.x.radius();
    GroupoidEPRates rates;
    rates.dx = s.X.v;
    rates.dX = -(s.X.v.squaredNorm() / (R * R)) * s.x.position();
    const Vec3 mu = p.I.apply(s.eta);
    rates.deta = p.I.solve(mu.cross(s.eta));
    return rates;
}

// -- trajectory ----------------------------------------------------------------

namespace {

double max_rel_drift(const std::vector<Trajectory::Invariants>& inv,
                     double Trajectory::Invariants::*field) {
    if (inv.empty())
        return 0.0;
    const double ref = inv.front().*field;
    const double denom = std::max(std::abs(ref), 1e-300);
    double worst = 0.0;
    for (const auto& row : inv)
        worst = std::max(worst, std::abs(row.*field - ref) / denom);
    return worst;
}

} // namespace

double Trajectory::max_rel_drift_energy() const {
    return max_rel_drift(invariants, &Invariants::energy);
}
double Trajectory::max_rel_drift_casimir() const {
    return max_rel_drift(invariants, &Invariants::casimir);
}
double Trajectory::max_rel_drift_speed() const {
    return max_rel_drift(invariants, &Invariants::speed);
}

void Trajectory::write_csv(std::ostream& os) const {
    os << "t";
    for (const auto& c : columns)
        os << ',' << c;
    os << ",energy,casimir,speed\n";
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    for (std::size_t k = 0; k < times.size(); ++k) {
        put(times[k]);
        for (Eigen::Index i = 0; i < states[k].size(); ++i) {
            os << ',';
            put(states[k][i]);
        }
        os << ',';
        put(invariants[k].energy);
        os << ',';
        put(invariants[k].casimir);
        os << ',';
        put(invariants[k].speed);
        os << '\n';
    }
}

void Trajectory::write_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os)
        throw IOError("Trajectory::write_csv: cannot open " + path);
    write_csv(os);
}

// -- integrators ----------------------------------------------------------------

namespace {

void check_grid(double dt, int steps) {
    if (!(dt > 0.0))
        throw ValidationError("integrate: dt must be positive");
    if (steps < 1)
        throw ValidationError("integrate: steps must be >= 1");
}

} // namespace

Trajectory integrate_rigid_body(const RigidBodyState& s0, double dt, int steps) {
    check_grid(dt, steps);
    const InertiaTensor& I = s0.I;

    StateRhs rhs = [&I](double, const Eigen::VectorXd& s) {
        const RigidBodyState st{Vec3(s), I};
        return Eigen::VectorXd(rigid_body_rhs(st));
    };

    Trajectory traj;
    traj.columns = {"M1", "M2", "M3"};
    Eigen::VectorXd s = s0.M;
    double t = 0.0;
    auto log_state = [&](double tk, const Eigen::VectorXd& sk) {
        const Vec3 M(sk);
        const Vec3 omega = I.solve(M);
        traj.times.push_back(tk);
        traj.states.push_back(sk);
        traj.invariants.push_back({0.5 * M.dot(omega), M.squaredNorm(), 0.0});
    };
    log_state(t, s);
    for (int k = 0; k < steps; ++k) {
        s = rk4_step(rhs, s, t, dt);
        t = (k + 1) * dt;
        log_state(t, s);
    }
    return traj;
}

Trajectory integrate_advected(const AdvectedState& s0, const InertiaTensor& I,
                              const PotentialGradient& dl_da, double dt, int steps,
                              const Potential& V) {
    check_grid(dt, steps);

    StateRhs rhs = [&](double, const Eigen::VectorXd& s) {
        const AdvectedState st{Vec3(s.head<3>()), Vec3(s.tail<3>())};
        const auto [dmu, da] = advected_ep_rhs(st, I, dl_da);
        Eigen::VectorXd out(6);
        out << dmu, da;
        return out;
    };

    Trajectory traj;
    traj.columns = {"mu1", "mu2", "mu3", "a1", "a2", "a3"};
    Eigen::VectorXd s(6);
    s << s0.mu, s0.a;
    double t = 0.0;
    auto log_state = [&](double tk, const Eigen::VectorXd& sk) {
        const Vec3 mu(sk.head<3>()), a(sk.tail<3>());
        double energy = 0.5 * mu.dot(I.solve(mu));
        if (V)
            energy -= V(a);
        traj.times.push_back(tk);
        traj.states.push_back(sk);
        traj.invariants.push_back({energy, a.squaredNorm(), 0.0});
    };
    log_state(t, s);
    for (int k = 0; k < steps; ++k) {
        s = rk4_step(rhs, s, t, dt);
        t = (k + 1) * dt;
        log_state(t, s);
    }
    return traj;
}

Trajectory integrate_forced(const RigidBodyState& s0, const BodyForce& F_body, double dt,
                            int steps) {
    check_grid(dt, steps);
    const InertiaTensor& I = s0.I;

    StateRhs rhs = [&](double t, const Eigen::VectorXd& s) {
        const RigidBodyState st{Vec3(s), I};
        return Eigen::VectorXd(forced_ep_rhs(st, t, F_body));
    };

    Trajectory traj;
    traj.columns = {"M1", "M2", "M3"};
    Eigen::VectorXd s = s0.M;
    double t = 0.0;
    auto log_state = [&](double tk, const Eigen::VectorXd& sk) {
        const Vec3 M(sk);
        traj.times.push_back(tk);
        traj.states.push_back(sk);
        traj.invariants.push_back({0.5 * M.dot(I.solve(M)), M.squaredNorm(), 0.0});
    };
    log_state(t, s);
    for (int k = 0; k < steps; ++k) {
        s = rk4_step(rhs, s, t, dt);
        t = (k + 1) * dt;
        log_state(t, s);
    }
    return traj;
}

TrivialEPResult integrate_trivial_ep(const GroupoidEPState& s0, const GroupoidEPParams& p,
                                     double dt, int steps) {
    check_grid(dt, steps);
    const double R = s0.x.radius();
    const InertiaTensor& I = p.I;

    // State layout: x(0..2), X(3..5), mu(6..8). The momentum block evolves by
    // rigid_body_rhs on its own components, so an X0 = 0 run reproduces the
    // pure rigid body arithmetic exactly.
    StateRhs rhs = [&](double, const Eigen::VectorXd& s) {
        Eigen::VectorXd out(9);
        const Vec3 x(s.segment<3>(0)), X(s.segment<3>(3)), mu(s.segment<3>(6));
        out.segment<3>(0) = X;
        out.segment<3>(3) = -(X.squaredNorm() / (R * R)) * x;
        out.segment<3>(6) = rigid_body_rhs(RigidBodyState{mu, I});
        return out;
    };

    Trajectory traj;
    traj.columns = {"x1", "x2", "x3", "X1", "X2", "X3", "eta1", "eta2", "eta3"};

    Eigen::VectorXd s(9);
    s << s0.x.position(), project_tangent(s0.x, s0.X.v).v, I.apply(s0.eta);

    std::vector<Vec3> eta_series;
    eta_series.reserve(steps + 1);

    auto log_state = [&](double tk, const Eigen::VectorXd& sk) {
        const Vec3 x(sk.segment<3>(0)), X(sk.segment<3>(3)), mu(sk.segment<3>(6));
        const Vec3 eta = I.solve(mu);
        eta_series.push_back(eta);
        Eigen::VectorXd row(9);
        row << x, X, eta;
        traj.times.push_back(tk);
        traj.states.push_back(row);
        traj.invariants.push_back({0.5 * eta.dot(mu) + 0.5 * p.alpha * X.squaredNorm(),
                                   mu.squaredNorm(), X.norm()});
    };

    double t = 0.0;
    log_state(t, s);
    for (int k = 0; k < steps; ++k) {
        s = rk4_step(rhs, s, t, dt);
        t = (k + 1) * dt;

        // keep the position on the sphere and the velocity tangent
        Vec3 x(s.segment<3>(0));
        const double drift = std::abs(x.norm() - R);
        if (drift > 1e-6 * R)
            throw IntegrationDiverged("integrate_trivial_ep: position left the sphere");
        x *= R / x.norm();
        const SpherePoint xp(x, R);
        s.segment<3>(0) = x;
        s.segment<3>(3) = project_tangent(xp, Vec3(s.segment<3>(3))).v;

        log_state(t, s);
    }

    // midpoint samples by interpolation; exact for constant eta
    std::vector<Vec3> eta_mid(steps);
    for (int k = 0; k < steps; ++k)
        eta_mid[k] = 0.5 * (eta_series[k] + eta_series[k + 1]);

    TrivialEPResult result;
    result.trajectory = std::move(traj);
    result.attitude = reconstruct_group_path(eta_mid, s0.attitude, dt);
    return result;
}

std::vector<Rotation> reconstruct_group_path(const std::vector<Vec3>& eta_mid,
                                             const Rotation& R0, double dt) {
    if (!(dt > 0.0))
        throw ValidationError("reconstruct_group_path: dt must be positive");
    std::vector<Rotation> path;
    path.reserve(eta_mid.size() + 1);
    path.push_back(R0);
    for (const Vec3& eta : eta_mid)
        path.push_back(path.back() * Rotation::exp(eta * dt));
    return path;
}

} // namespace gmech
