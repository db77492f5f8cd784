#pragma once

#include <cstddef>

// Dense inner-loop kernels on contiguous double arrays. Complex data is kept
// in split form (separate real and imaginary arrays), which turns every
// complex update below into plain fused multiply-adds over unit-stride
// doubles. Each kernel has a scalar reference implementation and, on x86-64,
// an AVX2+FMA variant; the active backend is chosen once at runtime.
//
// Complex conventions (a = ar + i*ai, s = sr + i*si):
//   caxpy       y += a*x        : yr += ar*xr - ai*xi,  yi += ar*xi + ai*xr
//   caxpy_conj  y += a*conj(x)  : yr += ar*xr + ai*xi,  yi += ai*xr - ar*xi
//   zrot        (x, y) <- (c*x - s*y, conj(s)*x + c*y)   with c real
namespace exclusion::kern {

enum class Backend { Auto, Scalar, Avx2 };

// Selects the backend for all subsequent kernel calls. Auto picks AVX2 when
// the CPU supports it. Not thread-safe; call before spawning workers.
void force_backend(Backend b);
Backend active_backend();
bool avx2_available();

double dot(const double* x, const double* y, std::size_t n);
double diff_sq(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void axpby(double a, const double* x, double b, double* y, std::size_t n);
void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n);
void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n);
void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double diff_sq(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void axpby(double a, const double* x, double b, double* y, std::size_t n);
void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n);
void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n);
void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double diff_sq(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void axpby(double a, const double* x, double b, double* y, std::size_t n);
void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n);
void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n);
void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n);
}  // namespace avx2
#endif

}  // namespace exclusion::kern
