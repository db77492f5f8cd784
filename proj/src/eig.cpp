#include "exclusion/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exclusion/kernels.hpp"

namespace exclusion {

namespace {

constexpr int kMaxSweeps = 60;

double offdiag_sq(const ComplexMatrix& a) {
    const int d = a.dim();
    double acc = 0.0;
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) acc += std::norm(a.at(p, q));
    return 2.0 * acc;
}

// One similarity rotation J^+ A J on the (p,q) plane. J has c on the
// diagonal, s at (p,q) and -conj(s) at (q,p), with c real and c^2+|s|^2=1.
// Rows p,q of A transform as (x,y) <- (c x - s y, conj(s) x + c y); the
// mirrored columns follow from Hermiticity, and the 2x2 block is set to its
// analytic post-rotation values a_pp - t|z|, a_qq + t|z|, 0.
void rotate(ComplexMatrix& a, ComplexMatrix& vecs, int p, int q, double c,
            double sr, double si, double app_new, double aqq_new) {
    const int d = a.dim();
    kern::zrot(c, sr, si, a.re_row(p), a.im_row(p), a.re_row(q), a.im_row(q),
               static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (i == p || i == q) continue;
        a.set(i, p, std::conj(a.at(p, i)));
        a.set(i, q, std::conj(a.at(q, i)));
    }
    a.set(p, p, Cx{app_new, 0.0});
    a.set(q, q, Cx{aqq_new, 0.0});
    a.set(p, q, Cx{0.0, 0.0});
    a.set(q, p, Cx{0.0, 0.0});
    // Eigenvector rows accumulate V <- V J, i.e. K(c, conj(s)) on rows p,q
    // of the transposed storage.
    kern::zrot(c, sr, -si, vecs.re_row(p), vecs.im_row(p), vecs.re_row(q),
               vecs.im_row(q), static_cast<std::size_t>(d));
}

void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix& vecs) {
    const int d = a.dim();
    vecs = ComplexMatrix::identity(d);
    if (d == 1) {
        a.set(0, 0, Cx{a.at(0, 0).real(), 0.0});
        return;
    }
    const double norm_a = frobenius_norm(a);
    const double stop = 1e-14 * std::max(1.0, norm_a);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = std::sqrt(offdiag_sq(a));
        if (off <= stop) break;
        // Classical threshold schedule: early sweeps only rotate pairs that
        // carry a meaningful share of the off-diagonal mass.
        const double tresh =
            sweep < 3 ? 0.2 * off / (static_cast<double>(d) * d) : 0.0;
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const Cx z = a.at(p, q);
                const double r = std::abs(z);
                if (r <= tresh || r == 0.0) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                if (r < 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    a.set(p, q, Cx{0.0, 0.0});
                    a.set(q, p, Cx{0.0, 0.0});
                    continue;
                }
                // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0.
                const double tau = (app - aqq) / (2.0 * r);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Cx s = (z / r) * (t * c);
                rotate(a, vecs, p, q, c, s.real(), s.imag(), app - t * r,
                       aqq + t * r);
            }
        }
    }
}

void extract_sorted(JacobiWorkspace& ws) {
    const int d = ws.a.dim();
    ws.eigenvalues.resize(static_cast<std::size_t>(d));
    ws.order.resize(static_cast<std::size_t>(d));
    std::iota(ws.order.begin(), ws.order.end(), 0);
    std::vector<double> diag(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) diag[static_cast<std::size_t>(i)] = ws.a.at(i, i).real();
    std::stable_sort(ws.order.begin(), ws.order.end(),
                     [&](int i, int j) { return diag[static_cast<std::size_t>(i)] > diag[static_cast<std::size_t>(j)]; });
    ComplexMatrix sorted(d);
    for (int k = 0; k < d; ++k) {
        const int src = ws.order[static_cast<std::size_t>(k)];
        ws.eigenvalues[static_cast<std::size_t>(k)] = diag[static_cast<std::size_t>(src)];
        std::copy_n(ws.vectors.re_row(src), d, sorted.re_row(k));
        std::copy_n(ws.vectors.im_row(src), d, sorted.im_row(k));
    }
    ws.vectors = std::move(sorted);
}

}  // namespace

void JacobiWorkspace::resize(int dim) {
    if (a.dim() != dim) {
        a = ComplexMatrix(dim);
        vectors = ComplexMatrix(dim);
    }
}

void eig_hermitian_inplace(JacobiWorkspace& ws) {
    jacobi_diagonalize(ws.a, ws.vectors);
    extract_sorted(ws);
}

HermitianEig eig_hermitian(const ComplexMatrix& a) {
    const double dev = hermitian_deviation(a);
    if (dev > kHermitianTol * std::max(1.0, frobenius_norm(a)))
        throw NotHermitian("eig_hermitian: ||a - a^+||_F = " +
                           std::to_string(dev));
    JacobiWorkspace ws;
    ws.a = a;
    symmetrize(ws.a);
    eig_hermitian_inplace(ws);
    return HermitianEig{std::move(ws.eigenvalues), std::move(ws.vectors)};
}

void project_psd_inplace(ComplexMatrix& a, JacobiWorkspace& ws) {
    const int d = a.dim();
    ws.resize(d);
    ws.a = a;
    symmetrize(ws.a);
    eig_hermitian_inplace(ws);
    a.zero();
    for (int k = 0; k < d; ++k) {
        const double lam = ws.eigenvalues[static_cast<std::size_t>(k)];
        if (lam <= 0.0) break;  // sorted nonincreasing
        const double* vr = ws.vectors.re_row(k);
        const double* vi = ws.vectors.im_row(k);
        for (int i = 0; i < d; ++i) {
            kern::caxpy_conj(lam * vr[i], lam * vi[i], vr, vi, a.re_row(i),
                             a.im_row(i), static_cast<std::size_t>(d));
        }
    }
}

ComplexMatrix project_psd(const ComplexMatrix& a) {
    const double dev = hermitian_deviation(a);
    if (dev > kHermitianTol * std::max(1.0, frobenius_norm(a)))
        throw NotHermitian("project_psd: ||a - a^+||_F = " +
                           std::to_string(dev));
    ComplexMatrix out = a;
    JacobiWorkspace ws;
    project_psd_inplace(out, ws);
    return out;
}

double min_eigenvalue(const ComplexMatrix& a) {
    const HermitianEig e = eig_hermitian(a);
    return e.eigenvalues.back();
}

}  // namespace exclusion
