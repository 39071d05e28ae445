#include "gmech/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gmech {

namespace {

// unit-sphere log map: tangent at a pointing toward b, length = angle
Vec3 log_unit(const Vec3& a, const Vec3& b) {
    const double c = a.dot(b);
    const double s = a.cross(b).norm();
    const double phi = std::atan2(s, c);
    if (phi < 1e-14)
        return Vec3::Zero();
    const Vec3 u = b - c * a; // |u| = sin(phi)
    return (phi / std::sin(phi)) * u;
}

// parallel transport of tangent v from a to b along the minimal geodesic
Vec3 transport_unit(const Vec3& a, const Vec3& b, const Vec3& v) {
    const Vec3 cr = a.cross(b);
    const double s = cr.norm();
    const double c = a.dot(b);
    if (s < 1e-14)
        return v;
    const Vec3 axis = cr / s;
    const double phi = std::atan2(s, c);
    const double cp = std::cos(phi), sp = std::sin(phi);
    return cp * v + sp * axis.cross(v) + (1.0 - cp) * axis.dot(v) * axis;
}

} // namespace

FieldContext::FieldContext(IcosphereMesh mesh, const InertiaTensor& I, double alpha)
    : mesh_(std::move(mesh)), I_(I), alpha_(alpha) {
    if (!(alpha > 0.0))
        throw ValidationError("FieldContext: alpha must be positive");

    const int nv = mesh_.vertex_count();
    const int nf = mesh_.face_count();
    const double R = mesh_.radius;

    unit_vertices_.resize(nv);
    normals_.resize(nv);
    for (int v = 0; v < nv; ++v) {
        unit_vertices_[v] = mesh_.vertices[v] / R;
        normals_.set(v, unit_vertices_[v]);
    }

    corner_inverse_.resize(nf);
    for (int f = 0; f < nf; ++f) {
        Mat3 corners;
        for (int k = 0; k < 3; ++k)
            corners.col(k) = unit_vertices_[mesh_.faces[f][k]];
        corner_inverse_[f] = corners.inverse();
    }

    // least-squares gradient stencils in the tangent plane of each vertex
    stencils_.resize(nv);
    for (int v = 0; v < nv; ++v) {
        const auto& ring = mesh_.vertex_neighbors[v];
        const int k = static_cast<int>(ring.size());
        const Vec3 n = unit_vertices_[v];

        Vec3 t1 = n.cross(std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).normalized();
        Vec3 t2 = n.cross(t1);

        Eigen::MatrixXd A(k, 2);
        for (int j = 0; j < k; ++j) {
            const Vec3 d = R * log_unit(n, unit_vertices_[ring[j]]);
            A(j, 0) = d.dot(t1);
            A(j, 1) = d.dot(t2);
        }
        const Eigen::Matrix2d G = (A.transpose() * A).inverse();
        const Eigen::MatrixXd W = A * G; // k x 2, rows are the 2D weights

        auto& st = stencils_[v];
        st.nbr.assign(ring.begin(), ring.end());
        st.w.resize(k);
        for (int j = 0; j < k; ++j)
            st.w[j] = W(j, 0) * t1 + W(j, 1) * t2;
    }
}

FieldContext::Sample FieldContext::locate(const Vec3& unit_pt, int start_face) const {
    int f = start_face;
    for (int iter = 0; iter < 64; ++iter) {
        const Vec3 lam = corner_inverse_[f] * unit_pt;
        int worst = 0;
        lam.minCoeff(&worst);
        if (lam[worst] >= -1e-12) {
            const double sum = lam.sum();
            return Sample{f, {lam[0] / sum, lam[1] / sum, lam[2] / sum}};
        }
        f = mesh_.face_neighbors[f][worst];
    }
    // walk failed to settle (can only happen from a bad start); scan everything
    int best_f = 0;
    double best_min = -std::numeric_limits<double>::max();
    Vec3 best_lam = Vec3::Zero();
    for (int g = 0; g < mesh_.face_count(); ++g) {
        const Vec3 lam = corner_inverse_[g] * unit_pt;
        const double m = lam.minCoeff();
        if (m > best_min) {
            best_min = m;
            best_f = g;
            best_lam = lam;
        }
    }
    const double sum = best_lam.sum();
    return Sample{best_f, {best_lam[0] / sum, best_lam[1] / sum, best_lam[2] / sum}};
}

FieldState make_field_state(const FieldContext& ctx, const Vec3& eta0,
                            const std::function<Vec3(const Vec3&)>& X0) {
    const int nv = ctx.vertex_count();
    FieldState s;
    s.eta.resize(nv);
    s.X.resize(nv);
    s.mu.resize(nv);
    s.m.resize(nv);
    s.eta.fill(eta0);
    const Vec3 mu0 = ctx.inertia().apply(eta0);
    s.mu.fill(mu0);
    for (int v = 0; v < nv; ++v) {
        Vec3 x = Vec3::Zero();
        if (X0) {
            const Vec3 n = ctx.unit_vertex(v);
            x = X0(ctx.mesh().vertices[v]);
            x -= x.dot(n) * n;
        }
        s.X.set(v, x);
        s.m.set(v, ctx.alpha() * x);
    }
    return s;
}

// -- sampling ------------------------------------------------------------------

namespace {

struct Backtrace {
    Vec3 point;       // unit sphere
    FieldContext::Sample sample;
    bool moved;
};

Backtrace backtrace_vertex(const FieldContext& ctx, const kernels::Vec3Soa& X, int v,
                           double dt) {
    const Vec3 n = ctx.unit_vertex(v);
    const Vec3 Xv = X.get(v);
    const double speed = Xv.norm();
    if (speed == 0.0)
        return {n, {ctx.mesh().vertex_face[v], {0, 0, 0}}, false};
    const double theta = dt * speed / ctx.mesh().radius;
    const Vec3 b = std::cos(theta) * n - (std::sin(theta) / speed) * Xv;
    return {b, ctx.locate(b, ctx.mesh().vertex_face[v]), true};
}

// gradient-augmented sample of an so(3)-valued (componentwise flat) field
Vec3 sample_so3(const FieldContext& ctx, const kernels::Vec3Soa& f, const Backtrace& bt) {
    const auto& face = ctx.mesh().faces[bt.sample.face];
    const double R = ctx.mesh().radius;
    Vec3 acc = Vec3::Zero();
    for (int k = 0; k < 3; ++k) {
        const int m = face[k];
        const Vec3 fm = f.get(m);
        const Vec3 u = R * log_unit(ctx.unit_vertex(m), bt.point);
        const auto& st = ctx.stencil(m);
        Vec3 taylor = fm;
        for (std::size_t j = 0; j < st.nbr.size(); ++j)
            taylor += (0.5 * st.w[j].dot(u)) * (f.get(st.nbr[j]) - fm);
        acc += bt.sample.w[k] * taylor;
    }
    return acc;
}

double sample_scalar(const FieldContext& ctx, const std::vector<double>& f,
                     const Backtrace& bt) {
    const auto& face = ctx.mesh().faces[bt.sample.face];
    const double R = ctx.mesh().radius;
    double acc = 0.0;
    for (int k = 0; k < 3; ++k) {
        const int m = face[k];
        const Vec3 u = R * log_unit(ctx.unit_vertex(m), bt.point);
        const auto& st = ctx.stencil(m);
        double taylor = f[m];
        for (std::size_t j = 0; j < st.nbr.size(); ++j)
            taylor += (0.5 * st.w[j].dot(u)) * (f[st.nbr[j]] - f[m]);
        acc += bt.sample.w[k] * taylor;
    }
    return acc;
}

// tangent-valued sample: per-corner Taylor with transported differences,
// corner values transported to the sample point, then combined
Vec3 sample_tangent(const FieldContext& ctx, const kernels::Vec3Soa& f, const Backtrace& bt) {
    const auto& face = ctx.mesh().faces[bt.sample.face];
    const double R = ctx.mesh().radius;
    Vec3 acc = Vec3::Zero();
    for (int k = 0; k < 3; ++k) {
        const int m = face[k];
        const Vec3 nm = ctx.unit_vertex(m);
        const Vec3 fm = f.get(m);
        const Vec3 u = R * log_unit(nm, bt.point);
        const auto& st = ctx.stencil(m);
        Vec3 taylor = fm;
        for (std::size_t j = 0; j < st.nbr.size(); ++j) {
            const Vec3 delta =
                transport_unit(ctx.unit_vertex(st.nbr[j]), nm, f.get(st.nbr[j])) - fm;
            taylor += (0.5 * st.w[j].dot(u)) * delta;
        }
        acc += bt.sample.w[k] * transport_unit(nm, bt.point, taylor);
    }
    acc -= acc.dot(bt.point) * bt.point;
    return acc;
}

void check_cfl(const FieldContext& ctx, const kernels::Vec3Soa& X, double dt,
               const char* where) {
    double vmax = 0.0;
    for (std::size_t v = 0; v < X.size(); ++v)
        vmax = std::max(vmax, X.get(v).norm());
    if (vmax * dt > 0.5 * ctx.mesh().min_edge) {
        std::ostringstream os;
        os << where << ": CFL violated, max|X| dt = " << vmax * dt
           << " exceeds half the minimum edge " << 0.5 * ctx.mesh().min_edge;
        throw CFLViolation(os.str());
    }
}

} // namespace

kernels::Vec3Soa lie_derivative_so3(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                    const kernels::Vec3Soa& f, double dt_trace) {
    check_cfl(ctx, X, dt_trace, "lie_derivative_so3");
    const int nv = ctx.vertex_count();
    kernels::Vec3Soa out(nv);
    for (int v = 0; v < nv; ++v) {
        const Backtrace bt = backtrace_vertex(ctx, X, v, dt_trace);
        if (!bt.moved) {
            out.set(v, Vec3::Zero());
            continue;
        }
        out.set(v, (f.get(v) - sample_so3(ctx, f, bt)) / dt_trace);
    }
    return out;
}

kernels::Vec3Soa transport_derivative_tangent(const FieldContext& ctx,
                                              const kernels::Vec3Soa& X,
                                              const kernels::Vec3Soa& f, double dt_trace) {
    check_cfl(ctx, X, dt_trace, "transport_derivative_tangent");
    const int nv = ctx.vertex_count();
    kernels::Vec3Soa out(nv);
    for (int v = 0; v < nv; ++v) {
        const Backtrace bt = backtrace_vertex(ctx, X, v, dt_trace);
        if (!bt.moved) {
            out.set(v, Vec3::Zero());
            continue;
        }
        const Vec3 n = ctx.unit_vertex(v);
        Vec3 sampled = transport_unit(bt.point, n, sample_tangent(ctx, f, bt));
        sampled -= sampled.dot(n) * n;
        out.set(v, (f.get(v) - sampled) / dt_trace);
    }
    return out;
}

kernels::Vec3Soa lie_derivative_covector(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                         const kernels::Vec3Soa& m, double dt_trace) {
    kernels::Vec3Soa out = transport_derivative_tangent(ctx, X, m, dt_trace);
    // co-rotation term <m, grad_. X>
    const int nv = ctx.vertex_count();
    for (int v = 0; v < nv; ++v) {
        const Vec3 n = ctx.unit_vertex(v);
        const Vec3 mv = m.get(v);
        const Vec3 Xv = X.get(v);
        const auto& st = ctx.stencil(v);
        Vec3 corr = Vec3::Zero();
        for (std::size_t j = 0; j < st.nbr.size(); ++j) {
            const Vec3 dX = transport_unit(ctx.unit_vertex(st.nbr[j]), n, X.get(st.nbr[j])) - Xv;
            corr += st.w[j] * mv.dot(dX);
        }
        out.set(v, out.get(v) + corr);
    }
    return out;
}

kernels::Vec3Soa directional_derivative_so3(const FieldContext& ctx, const kernels::Vec3Soa& Y,
                                            const kernels::Vec3Soa& f) {
    const int nv = ctx.vertex_count();
    kernels::Vec3Soa out(nv);
    for (int v = 0; v < nv; ++v) {
        const Vec3 Yv = Y.get(v);
        const Vec3 fv = f.get(v);
        const auto& st = ctx.stencil(v);
        Vec3 acc = Vec3::Zero();
        for (std::size_t j = 0; j < st.nbr.size(); ++j)
            acc += st.w[j].dot(Yv) * (f.get(st.nbr[j]) - fv);
        out.set(v, acc);
    }
    return out;
}

kernels::Vec3Soa diamond_field(const FieldContext& ctx, const kernels::Vec3Soa& mu,
                               const kernels::Vec3Soa& eta) {
    const int nv = ctx.vertex_count();
    kernels::Vec3Soa out(nv);
    for (int v = 0; v < nv; ++v) {
        const Vec3 muv = mu.get(v);
        const Vec3 etav = eta.get(v);
        const auto& st = ctx.stencil(v);
        Vec3 acc = Vec3::Zero();
        for (std::size_t j = 0; j < st.nbr.size(); ++j)
            acc -= st.w[j] * muv.dot(eta.get(st.nbr[j]) - etav);
        out.set(v, acc);
    }
    return out;
}

double field_pairing(const FieldContext& ctx, const kernels::Vec3Soa& a,
                     const kernels::Vec3Soa& b) {
    double acc = 0.0;
    for (int v = 0; v < ctx.vertex_count(); ++v)
        acc += ctx.mesh().dual_areas[v] * a.get(v).dot(b.get(v));
    return acc;
}

// -- stepping -------------------------------------------------------------------

namespace {

struct Rates {
    kernels::Vec3Soa dmu, dm;
};

Rates field_rhs(const FieldContext& ctx, const kernels::Vec3Soa& mu, const kernels::Vec3Soa& m,
                const kernels::Vec3Soa& eta, const kernels::Vec3Soa& X, double dt) {
    const std::size_t n = mu.size();
    Rates r;
    r.dmu.resize(n);
    r.dm.resize(n);

    // dmu = mu x eta - L_X mu
    kernels::cross(mu.view(), eta.view(), r.dmu.view(), n);
    {
        const kernels::Vec3Soa L = lie_derivative_so3(ctx, X, mu, dt);
        kernels::axpy(-1.0, L.view(), r.dmu.view(), n);
    }

    // dm = -L_X m - diamond(mu, eta)
    {
        const kernels::Vec3Soa L = lie_derivative_covector(ctx, X, m, dt);
        const kernels::Vec3Soa D = diamond_field(ctx, mu, eta);
        kernels::scale(-1.0, L.view(), r.dm.view(), n);
        kernels::axpy(-1.0, D.view(), r.dm.view(), n);
    }
    return r;
}

bool finite(const kernels::Vec3Soa& f) {
    for (std::size_t v = 0; v < f.size(); ++v)
        if (!f.get(v).allFinite())
            return false;
    return true;
}

} // namespace

void step_field(const FieldContext& ctx, FieldState& s, double dt) {
    if (!(dt > 0.0))
        throw ValidationError("step_field: dt must be positive");
    check_cfl(ctx, s.X, dt, "step_field");

    const std::size_t n = s.mu.size();
    const Mat3 I_inv = ctx.inertia().inverse();
    double inv_rm[9], ir[9];
    Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(inv_rm) = I_inv;
    Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(ir) = ctx.inertia().matrix();

    auto constitutive = [&](const kernels::Vec3Soa& mu, const kernels::Vec3Soa& m,
                            kernels::Vec3Soa& eta, kernels::Vec3Soa& X) {
        kernels::apply_matrix(inv_rm, mu.view(), eta.view(), n);
        kernels::scale(1.0 / ctx.alpha(), m.view(), X.view(), n);
    };

    // stage 1
    const Rates r1 = field_rhs(ctx, s.mu, s.m, s.eta, s.X, dt);

    kernels::Vec3Soa mu_h(n), m_h(n), eta_h(n), X_h(n);
    kernels::add_scaled(s.mu.view(), 0.5 * dt, r1.dmu.view(), mu_h.view(), n);
    kernels::add_scaled(s.m.view(), 0.5 * dt, r1.dm.view(), m_h.view(), n);
    kernels::project_tangent(ctx.unit_normals(), m_h.view(), n);
    constitutive(mu_h, m_h, eta_h, X_h);

    // stage 2 (midpoint)
    const Rates r2 = field_rhs(ctx, mu_h, m_h, eta_h, X_h, dt);

    kernels::Vec3Soa mu_new(n), m_new(n);
    kernels::add_scaled(s.mu.view(), dt, r2.dmu.view(), mu_new.view(), n);
    kernels::add_scaled(s.m.view(), dt, r2.dm.view(), m_new.view(), n);
    kernels::project_tangent(ctx.unit_normals(), m_new.view(), n);

    if (!finite(mu_new) || !finite(m_new))
        throw IntegrationDiverged("step_field: field is no longer finite");

    // tracer rides along by pure resampling
    if (!s.tracer.empty())
        s.tracer = advect_scalar(ctx, s.X, s.tracer, dt);

    s.mu = std::move(mu_new);
    s.m = std::move(m_new);
    constitutive(s.mu, s.m, s.eta, s.X);
    s.t += dt;
}

std::vector<double> advect_scalar(const FieldContext& ctx, const kernels::Vec3Soa& X,
                                  const std::vector<double>& f, double dt) {
    check_cfl(ctx, X, dt, "advect_scalar");
    const int nv = ctx.vertex_count();
    std::vector<double> out(nv);
    for (int v = 0; v < nv; ++v) {
        const Backtrace bt = backtrace_vertex(ctx, X, v, dt);
        out[v] = bt.moved ? sample_scalar(ctx, f, bt) : f[v];
    }
    return out;
}

double total_energy(const FieldContext& ctx, const FieldState& s) {
    const std::size_t n = s.mu.size();
    std::vector<double> rot(n), loc(n);
    kernels::dot(s.mu.view(), s.eta.view(), rot.data(), n);
    kernels::dot(s.X.view(), s.X.view(), loc.data(), n);
    double acc = 0.0;
    for (std::size_t v = 0; v < n; ++v)
        acc += ctx.mesh().dual_areas[v] * (rot[v] + ctx.alpha() * loc[v]);
    return 0.5 * acc;
}

double max_speed(const FieldState& s) {
    double vmax = 0.0;
    for (std::size_t v = 0; v < s.X.size(); ++v)
        vmax = std::max(vmax, s.X.get(v).norm());
    return vmax;
}

double field_l2(const FieldContext& ctx, const kernels::Vec3Soa& f) {
    double acc = 0.0;
    for (int v = 0; v < ctx.vertex_count(); ++v)
        acc += ctx.mesh().dual_areas[v] * f.get(v).squaredNorm();
    return std::sqrt(acc);
}

double field_l2(const FieldContext& ctx, const std::vector<double>& f) {
    double acc = 0.0;
    for (int v = 0; v < ctx.vertex_count(); ++v)
        acc += ctx.mesh().dual_areas[v] * f[v] * f[v];
    return std::sqrt(acc);
}

void write_field_csv(const FieldContext& ctx, const FieldState& s, std::ostream& os) {
    os << "vertex,x,y,z,eta1,eta2,eta3,X1,X2,X3,mu1,mu2,mu3,m1,m2,m3\n";
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    for (int v = 0; v < ctx.vertex_count(); ++v) {
        os << v;
        const Vec3 cols[5] = {ctx.mesh().vertices[v], s.eta.get(v), s.X.get(v), s.mu.get(v),
                              s.m.get(v)};
        for (const Vec3& c : cols)
            for (int i = 0; i < 3; ++i) {
                os << ',';
                put(c[i]);
            }
        os << '\n';
    }
}

void write_field_csv(const FieldContext& ctx, const FieldState& s, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw IOError("write_field_csv: cannot open " + path);
    write_field_csv(ctx, s, os);
}

} // namespace gmech
