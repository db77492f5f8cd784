// AVX2+FMA variants of the split-complex kernels. This translation unit is
// compiled with -mavx2 -mfma; callers must route through the runtime
// dispatcher so these are only reached on capable CPUs.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "exclusion/kernels.hpp"

namespace exclusion::kern::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                               _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double diff_sq(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d =
            _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(
            y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                   _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i,
                         _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), by));
    }
    for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n) {
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vxr = _mm256_loadu_pd(xr + i);
        const __m256d vxi = _mm256_loadu_pd(xi + i);
        __m256d r = _mm256_fmadd_pd(var, vxr, _mm256_loadu_pd(yr + i));
        r = _mm256_fnmadd_pd(vai, vxi, r);
        __m256d m = _mm256_fmadd_pd(var, vxi, _mm256_loadu_pd(yi + i));
        m = _mm256_fmadd_pd(vai, vxr, m);
        _mm256_storeu_pd(yr + i, r);
        _mm256_storeu_pd(yi + i, m);
    }
    for (; i < n; ++i) {
        yr[i] += ar * xr[i] - ai * xi[i];
        yi[i] += ar * xi[i] + ai * xr[i];
    }
}

void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n) {
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vxr = _mm256_loadu_pd(xr + i);
        const __m256d vxi = _mm256_loadu_pd(xi + i);
        __m256d r = _mm256_fmadd_pd(var, vxr, _mm256_loadu_pd(yr + i));
        r = _mm256_fmadd_pd(vai, vxi, r);
        __m256d m = _mm256_fmadd_pd(vai, vxr, _mm256_loadu_pd(yi + i));
        m = _mm256_fnmadd_pd(var, vxi, m);
        _mm256_storeu_pd(yr + i, r);
        _mm256_storeu_pd(yi + i, m);
    }
    for (; i < n; ++i) {
        yr[i] += ar * xr[i] + ai * xi[i];
        yi[i] += ai * xr[i] - ar * xi[i];
    }
}

void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vsr = _mm256_set1_pd(sr);
    const __m256d vsi = _mm256_set1_pd(si);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pxr = _mm256_loadu_pd(xr + i);
        const __m256d pxi = _mm256_loadu_pd(xi + i);
        const __m256d pyr = _mm256_loadu_pd(yr + i);
        const __m256d pyi = _mm256_loadu_pd(yi + i);
        // x' = c*x - s*y
        __m256d nxr = _mm256_mul_pd(vc, pxr);
        nxr = _mm256_fnmadd_pd(vsr, pyr, nxr);
        nxr = _mm256_fmadd_pd(vsi, pyi, nxr);
        __m256d nxi = _mm256_mul_pd(vc, pxi);
        nxi = _mm256_fnmadd_pd(vsr, pyi, nxi);
        nxi = _mm256_fnmadd_pd(vsi, pyr, nxi);
        // y' = conj(s)*x + c*y
        __m256d nyr = _mm256_mul_pd(vc, pyr);
        nyr = _mm256_fmadd_pd(vsr, pxr, nyr);
        nyr = _mm256_fmadd_pd(vsi, pxi, nyr);
        __m256d nyi = _mm256_mul_pd(vc, pyi);
        nyi = _mm256_fmadd_pd(vsr, pxi, nyi);
        nyi = _mm256_fnmadd_pd(vsi, pxr, nyi);
        _mm256_storeu_pd(xr + i, nxr);
        _mm256_storeu_pd(xi + i, nxi);
        _mm256_storeu_pd(yr + i, nyr);
        _mm256_storeu_pd(yi + i, nyi);
    }
    for (; i < n; ++i) {
        const double pxr = xr[i], pxi = xi[i];
        const double pyr = yr[i], pyi = yi[i];
        xr[i] = c * pxr - (sr * pyr - si * pyi);
        xi[i] = c * pxi - (sr * pyi + si * pyr);
        yr[i] = sr * pxr + si * pxi + c * pyr;
        yi[i] = sr * pxi - si * pxr + c * pyi;
    }
}

}  // namespace exclusion::kern::avx2

#endif  // x86-64
