#include "kernels_detail.hpp"

#ifdef GMECH_HAVE_AVX2

#include <immintrin.h>

// Four lanes of the scalar loops. Only mul/add/sub intrinsics are used
// (no FMA), so each lane rounds exactly like the scalar reference and the
// two backends agree bit for bit. Tails run the scalar expressions.

namespace gmech::kernels::detail::avx2 {

namespace {
inline __m256d load(const double* p) { return _mm256_loadu_pd(p); }
inline void store(double* p, __m256d v) { _mm256_storeu_pd(p, v); }
} // namespace

void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = load(a.x + i), ay = load(a.y + i), az = load(a.z + i);
        const __m256d bx = load(b.x + i), by = load(b.y + i), bz = load(b.z + i);
        store(out.x + i, _mm256_sub_pd(_mm256_mul_pd(ay, bz), _mm256_mul_pd(az, by)));
        store(out.y + i, _mm256_sub_pd(_mm256_mul_pd(az, bx), _mm256_mul_pd(ax, bz)));
        store(out.z + i, _mm256_sub_pd(_mm256_mul_pd(ax, by), _mm256_mul_pd(ay, bx)));
    }
    for (; i < n; ++i) {
        out.x[i] = a.y[i] * b.z[i] - a.z[i] * b.y[i];
        out.y[i] = a.z[i] * b.x[i] - a.x[i] * b.z[i];
        out.z[i] = a.x[i] * b.y[i] - a.y[i] * b.x[i];
    }
}

void axpy(double alpha, ConstView3 x, View3 y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        store(y.x + i, _mm256_add_pd(load(y.x + i), _mm256_mul_pd(va, load(x.x + i))));
        store(y.y + i, _mm256_add_pd(load(y.y + i), _mm256_mul_pd(va, load(x.y + i))));
        store(y.z + i, _mm256_add_pd(load(y.z + i), _mm256_mul_pd(va, load(x.z + i))));
    }
    for (; i < n; ++i) {
        y.x[i] = y.x[i] + alpha * x.x[i];
        y.y[i] = y.y[i] + alpha * x.y[i];
        y.z[i] = y.z[i] + alpha * x.z[i];
    }
}

void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        store(out.x + i, _mm256_add_pd(load(x.x + i), _mm256_mul_pd(va, load(d.x + i))));
        store(out.y + i, _mm256_add_pd(load(x.y + i), _mm256_mul_pd(va, load(d.y + i))));
        store(out.z + i, _mm256_add_pd(load(x.z + i), _mm256_mul_pd(va, load(d.z + i))));
    }
    for (; i < n; ++i) {
        out.x[i] = x.x[i] + alpha * d.x[i];
        out.y[i] = x.y[i] + alpha * d.y[i];
        out.z[i] = x.z[i] + alpha * d.z[i];
    }
}

void scale(double alpha, ConstView3 v, View3 out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        store(out.x + i, _mm256_mul_pd(va, load(v.x + i)));
        store(out.y + i, _mm256_mul_pd(va, load(v.y + i)));
        store(out.z + i, _mm256_mul_pd(va, load(v.z + i)));
    }
    for (; i < n; ++i) {
        out.x[i] = alpha * v.x[i];
        out.y[i] = alpha * v.y[i];
        out.z[i] = alpha * v.z[i];
    }
}

void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n) {
    const __m256d m0 = _mm256_set1_pd(m[0]), m1 = _mm256_set1_pd(m[1]), m2 = _mm256_set1_pd(m[2]);
    const __m256d m3 = _mm256_set1_pd(m[3]), m4 = _mm256_set1_pd(m[4]), m5 = _mm256_set1_pd(m[5]);
    const __m256d m6 = _mm256_set1_pd(m[6]), m7 = _mm256_set1_pd(m[7]), m8 = _mm256_set1_pd(m[8]);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = load(v.x + i), vy = load(v.y + i), vz = load(v.z + i);
        store(out.x + i,
              _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m0, vx), _mm256_mul_pd(m1, vy)),
                            _mm256_mul_pd(m2, vz)));
        store(out.y + i,
              _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m3, vx), _mm256_mul_pd(m4, vy)),
                            _mm256_mul_pd(m5, vz)));
        store(out.z + i,
              _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(m6, vx), _mm256_mul_pd(m7, vy)),
                            _mm256_mul_pd(m8, vz)));
    }
    for (; i < n; ++i) {
        const double vx = v.x[i], vy = v.y[i], vz = v.z[i];
        out.x[i] = (m[0] * vx + m[1] * vy) + m[2] * vz;
        out.y[i] = (m[3] * vx + m[4] * vy) + m[5] * vz;
        out.z[i] = (m[6] * vx + m[7] * vy) + m[8] * vz;
    }
}

void project_tangent(ConstView3 normal, View3 v, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d nx = load(normal.x + i), ny = load(normal.y + i), nz = load(normal.z + i);
        const __m256d vx = load(v.x + i), vy = load(v.y + i), vz = load(v.z + i);
        const __m256d d = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vx, nx), _mm256_mul_pd(vy, ny)), _mm256_mul_pd(vz, nz));
        store(v.x + i, _mm256_sub_pd(vx, _mm256_mul_pd(d, nx)));
        store(v.y + i, _mm256_sub_pd(vy, _mm256_mul_pd(d, ny)));
        store(v.z + i, _mm256_sub_pd(vz, _mm256_mul_pd(d, nz)));
    }
    for (; i < n; ++i) {
        const double d = (v.x[i] * normal.x[i] + v.y[i] * normal.y[i]) + v.z[i] * normal.z[i];
        v.x[i] = v.x[i] - d * normal.x[i];
        v.y[i] = v.y[i] - d * normal.y[i];
        v.z[i] = v.z[i] - d * normal.z[i];
    }
}

void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(load(a.x + i), load(b.x + i)),
                          _mm256_mul_pd(load(a.y + i), load(b.y + i))),
            _mm256_mul_pd(load(a.z + i), load(b.z + i)));
        store(out + i, d);
    }
    for (; i < n; ++i)
        out[i] = (a.x[i] * b.x[i] + a.y[i] * b.y[i]) + a.z[i] * b.z[i];
}

} // namespace gmech::kernels::detail::avx2

#endif // GMECH_HAVE_AVX2
