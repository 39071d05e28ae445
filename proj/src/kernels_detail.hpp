#pragma once

#include "gmech/kernels.hpp"

// Backend entry points. The scalar set is always compiled; the AVX2 set is
// compiled only when the build enables it (GMECH_HAVE_AVX2), in a separate
// translation unit built with -mavx2 so the rest of the library stays at the
// baseline ISA.

namespace gmech::kernels::detail {

namespace scalar {
void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n);
void axpy(double alpha, ConstView3 x, View3 y, std::size_t n);
void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n);
void scale(double alpha, ConstView3 v, View3 out, std::size_t n);
void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n);
void project_tangent(ConstView3 normal, View3 v, std::size_t n);
void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n);
} // namespace scalar

#ifdef GMECH_HAVE_AVX2
namespace avx2 {
void cross(ConstView3 a, ConstView3 b, View3 out, std::size_t n);
void axpy(double alpha, ConstView3 x, View3 y, std::size_t n);
void add_scaled(ConstView3 x, double alpha, ConstView3 d, View3 out, std::size_t n);
void scale(double alpha, ConstView3 v, View3 out, std::size_t n);
void apply_matrix(const double m[9], ConstView3 v, View3 out, std::size_t n);
void project_tangent(ConstView3 normal, View3 v, std::size_t n);
void dot(ConstView3 a, ConstView3 b, double* out, std::size_t n);
} // namespace avx2
#endif

} // namespace gmech::kernels::detail
