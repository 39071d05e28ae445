#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmech/algebra.hpp"

// Data-parallel inner loops of the field solver, in structure-of-arrays
// form: a scalar reference implementation plus an AVX2 variant selected at
// runtime. Both variants perform the same arithmetic in the same order per
// element (multiplies and adds only, no FMA contraction), so their results
// are bit-identical; the equivalence tests assert exactly that. Reductions
// are not vectorized anywhere -- integral assembly keeps a fixed sequential
// order so results do not depend on the backend or degree of parallelism.

namespace gmech::kernels {

enum class Backend { Scalar, Avx2 };

/// CPU support for the AVX2 variant, probed at runtime.
bool avx2_available();

/// Fastest supported backend; honors the GMECH_KERNELS environment
/// variable ("scalar" or "avx2") when set.
Backend preferred_backend();

Backend active_backend();
void set_active_backend(Backend be);

std::string backend_name(Backend be);

struct ConstView3 {
    const double* x;
    const double* y;
    const double* z;
};

struct View3 {
    double* x;
    double* y;
    double* z;
};

/// Structure-of-arrays storage for a field of 3-vectors.
class Vec3Soa {
public:
    Vec3Soa() = default;
    explicit Vec3Soa(std::size_t n) : x_(n, 0.0), y_(n, 0.0), z_(n, 0.0) {}

    std::size_t size() const { return x_.size(); }
    void resize(std::size_t n) {
        x_.assign(n, 0.0);
        y_.assign(n, 0.0);
        z_.assign(n, 0.0);
    }

    Vec3 get(std::size_t i) const { return Vec3(x_[i], y_[i], z_[i]); }
    void set(std::size_t i, const Vec3& v) {
        x_[i] = v.x();
        y_[i] = v.y();
        z_[i] = v.z();
    }
    void fill(const Vec3& v) {
        std::fill(x_.begin(), x_.end(), v.x());
        std::fill(y_.begin(), y_.end(), v.y());
        std::fill(z_.begin(), z_.end(), v.z());
    }

    ConstView3 view() const { return {x_.data(), y_.data(), z_.data()}; }
    View3 view() { return {x_.data(), y_.data(), z_.data()}; }

private:
    std::vector<double> x_, y_, z_;
};

// All kernels take an explicit backend; the defaulted argument uses the
// process-wide active one. `out` must not alias the inputs.

/// out_i = a_i x b_i
void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n,
           Backend be = active_backend());

/// y_i += alpha * x_i
void axpy(double alpha, ConstView3 x, View3 y, std::size_t n,
          Backend be = active_backend());

/// out_i = x_i + alpha * d_i   (Runge-Kutta stage combination)
void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n,
                Backend be = active_backend());

/// out_i = alpha * v_i
void scale(double alpha, ConstView3 v, View3 out, std::size_t n,
           Backend be = active_backend());

/// out_i = M v_i for a constant row-major 3x3 matrix M
void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n,
                  Backend be = active_backend());

/// v_i -= (v_i . n_i) n_i with n_i unit normals (tangent re-projection)
void project_tangent(ConstView3 normal, View3 v, std::size_t n,
                     Backend be = active_backend());

/// out_i = a_i . b_i
void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n,
         Backend be = active_backend());

} // namespace gmech::kernels
