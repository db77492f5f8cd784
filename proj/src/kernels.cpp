#include "exclusion/kernels.hpp"

namespace exclusion::kern {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double diff_sq(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        yr[i] += ar * xr[i] - ai * xi[i];
        yi[i] += ar * xi[i] + ai * xr[i];
    }
}

void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        yr[i] += ar * xr[i] + ai * xi[i];
        yi[i] += ai * xr[i] - ar * xi[i];
    }
}

void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double pxr = xr[i], pxi = xi[i];
        const double pyr = yr[i], pyi = yi[i];
        xr[i] = c * pxr - (sr * pyr - si * pyi);
        xi[i] = c * pxi - (sr * pyi + si * pyr);
        yr[i] = sr * pxr + si * pxi + c * pyr;
        yi[i] = sr * pxi - si * pxr + c * pyi;
    }
}

}  // namespace scalar

namespace {

struct Table {
    double (*dot)(const double*, const double*, std::size_t);
    double (*diff_sq)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*axpby)(double, const double*, double, double*, std::size_t);
    void (*caxpy)(double, double, const double*, const double*, double*,
                  double*, std::size_t);
    void (*caxpy_conj)(double, double, const double*, const double*, double*,
                       double*, std::size_t);
    void (*zrot)(double, double, double, double*, double*, double*, double*,
                 std::size_t);
};

constexpr Table kScalarTable{scalar::dot,   scalar::diff_sq,
                             scalar::axpy,  scalar::axpby,
                             scalar::caxpy, scalar::caxpy_conj,
                             scalar::zrot};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2Table{avx2::dot,   avx2::diff_sq,   avx2::axpy,
                           avx2::axpby, avx2::caxpy,     avx2::caxpy_conj,
                           avx2::zrot};
#endif

Backend g_requested = Backend::Auto;

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table& resolve() {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_requested == Backend::Avx2) return kAvx2Table;
    if (g_requested == Backend::Auto && cpu_has_avx2()) return kAvx2Table;
#endif
    return kScalarTable;
}

const Table* g_active = nullptr;

const Table& table() {
    if (!g_active) g_active = &resolve();
    return *g_active;
}

}  // namespace

void force_backend(Backend b) {
    g_requested = b;
    g_active = &resolve();
}

Backend active_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    return &table() == &kAvx2Table ? Backend::Avx2 : Backend::Scalar;
#else
    return Backend::Scalar;
#endif
}

bool avx2_available() { return cpu_has_avx2(); }

double dot(const double* x, const double* y, std::size_t n) {
    return table().dot(x, y, n);
}
double diff_sq(const double* x, const double* y, std::size_t n) {
    return table().diff_sq(x, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
    table().axpy(a, x, y, n);
}
void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    table().axpby(a, x, b, y, n);
}
void caxpy(double ar, double ai, const double* xr, const double* xi,
           double* yr, double* yi, std::size_t n) {
    table().caxpy(ar, ai, xr, xi, yr, yi, n);
}
void caxpy_conj(double ar, double ai, const double* xr, const double* xi,
                double* yr, double* yi, std::size_t n) {
    table().caxpy_conj(ar, ai, xr, xi, yr, yi, n);
}
void zrot(double c, double sr, double si, double* xr, double* xi, double* yr,
          double* yi, std::size_t n) {
    table().zrot(c, sr, si, xr, xi, yr, yi, n);
}

}  // namespace exclusion::kern
