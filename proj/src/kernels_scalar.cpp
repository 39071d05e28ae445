#include "kernels_detail.hpp"

// Reference kernels. The AVX2 variants mirror these loops operation for
// operation; any change here must be replicated there to keep the backends
// bit-identical.

namespace gmech::kernels::detail::scalar {

void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out.x[i] = a.y[i] * b.z[i] - a.z[i] * b.y[i];
        out.y[i] = a.z[i] * b.x[i] - a.x[i] * b.z[i];
        out.z[i] = a.x[i] * b.y[i] - a.y[i] * b.x[i];
    }
}

void axpy(double alpha, ConstView3 x, View3 y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y.x[i] = y.x[i] + alpha * x.x[i];
        y.y[i] = y.y[i] + alpha * x.y[i];
        y.z[i] = y.z[i] + alpha * x.z[i];
    }
}

void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out.x[i] = x.x[i] + alpha * d.x[i];
        out.y[i] = x.y[i] + alpha * d.y[i];
        out.z[i] = x.z[i] + alpha * d.z[i];
    }
}

void scale(double alpha, ConstView3 v, View3 out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out.x[i] = alpha * v.x[i];
        out.y[i] = alpha * v.y[i];
        out.z[i] = alpha * v.z[i];
    }
}

void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double vx = v.x[i], vy = v.y[i], vz = v.z[i];
        out.x[i] = (m[0] * vx + m[1] * vy) + m[2] * vz;
        out.y[i] = (m[3] * vx + m[4] * vy) + m[5] * vz;
        out.z[i] = (m[6] * vx + m[7] * vy) + m[8] * vz;
    }
}

void project_tangent(ConstView3 normal, View3 v, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = (v.x[i] * normal.x[i] + v.y[i] * normal.y[i]) + v.z[i] * normal.z[i];
        v.x[i] = v.x[i] - d * normal.x[i];
        v.y[i] = v.y[i] - d * normal.y[i];
        v.z[i] = v.z[i] - d * normal.z[i];
    }
}

void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (a.x[i] * b.x[i] + a.y[i] * b.y[i]) + a.z[i] * b.z[i];
}

} // namespace gmech::kernels::detail::scalar
