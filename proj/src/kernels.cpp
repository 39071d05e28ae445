#include "kernels_detail.hpp"

#include <cstdlib>

#include "gmech/errors.hpp"

namespace gmech::kernels {

bool avx2_available() {
#if defined(GMECH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend preferred_backend() {
    if (const char* env = std::getenv("GMECH_KERNELS")) {
        const std::string s(env);
        if (s == "scalar")
            return Backend::Scalar;
        if (s == "avx2" && avx2_available())
            return Backend::Avx2;
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

namespace {
Backend& active_slot() {
    static Backend be = preferred_backend();
    return be;
}
} // namespace

Backend active_backend() { return active_slot(); }

void set_active_backend(Backend be) {
    if (be == Backend::Avx2 && !avx2_available())
        throw Error("kernels: AVX2 backend not available on this CPU/build");
    active_slot() = be;
}

std::string backend_name(Backend be) {
    return be == Backend::Avx2 ? "avx2" : "scalar";
}

namespace {
bool use_avx2(Backend be) {
    if (be == Backend::Avx2 && !avx2_available())
        throw Error("kernels: AVX2 backend not available on this CPU/build");
    return be == Backend::Avx2;
}
} // namespace

#ifdef GMECH_HAVE_AVX2
#define GMECH_DISPATCH(fn, ...)                \
    do {                                       \
        if (use_avx2(be))                      \
            detail::avx2::fn(__VA_ARGS__);     \
        else                                   \
            detail::scalar::fn(__VA_ARGS__);   \
    } while (0)
#else
#define GMECH_DISPATCH(fn, ...)                \
    do {                                       \
        (void)use_avx2(be);                    \
        detail::scalar::fn(__VA_ARGS__);       \
    } while (0)
#endif

void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n, Backend be) {
    GMECH_DISPATCH(cross, a, b, out, n);
}

void axpy(double alpha, ConstView3 x, View3 y, std::size_t n, Backend be) {
    GMECH_DISPATCH(axpy, alpha, x, y, n);
}

void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n, Backend be) {
    GMECH_DISPATCH(add_scaled, x, alpha, d, out, n);
}

void scale(double alpha, ConstView3 v, View3 out, std::size_t n, Backend be) {
    GMECH_DISPATCH(scale, alpha, v, out, n);
}

void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n, Backend be) {
    GMECH_DISPATCH(apply_matrix, m, v, out, n);
}

void project_tangent(ConstView3 normal, View3 v, std::size_t n, Backend be) {
    GMECH_DISPATCH(project_tangent, normal, v, n);
}

void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n, Backend be) {
    GMECH_DISPATCH(dot, a, b, out, n);
}

#undef GMECH_DISPATCH

} // namespace gmech::kernels
