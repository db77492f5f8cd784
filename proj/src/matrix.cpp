#include "exclusion/matrix.hpp"

#include <cmath>

#include "exclusion/kernels.hpp"

namespace exclusion {

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                    const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": dimensions " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.re_[m.idx(i, i)] = 1.0;
    return m;
}

void ComplexMatrix::zero() {
    std::fill(re_.begin(), re_.end(), 0.0);
    std::fill(im_.begin(), im_.end(), 0.0);
}

void ComplexMatrix::scale(double a) {
    kern::axpby(0.0, re_.data(), a, re_.data(), re_.size());
    kern::axpby(0.0, im_.data(), a, im_.data(), im_.size());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    check_same_dim(*this, o, "operator+=");
    kern::axpy(1.0, o.re_.data(), re_.data(), re_.size());
    kern::axpy(1.0, o.im_.data(), im_.data(), im_.size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    check_same_dim(*this, o, "operator-=");
    kern::axpy(-1.0, o.re_.data(), re_.data(), re_.size());
    kern::axpy(-1.0, o.im_.data(), im_.data(), im_.size());
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(double a, ComplexMatrix m) {
    m.scale(a);
    return m;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int d = a.dim();
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.set(i, j, std::conj(a.at(j, i)));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            const Cx aij = a.at(i, j);
            for (int k = 0; k < db; ++k) {
                const double* br = b.re_row(k);
                const double* bi = b.im_row(k);
                double* outr = out.re_row(i * db + k) + j * db;
                double* outi = out.im_row(i * db + k) + j * db;
                kern::caxpy(aij.real(), aij.imag(), br, bi, outr, outi,
                            static_cast<std::size_t>(db));
            }
        }
    }
    return out;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "mul");
    const int d = a.dim();
    ComplexMatrix out(d);
    for (int i = 0; i < d; ++i) {
        double* cr = out.re_row(i);
        double* ci = out.im_row(i);
        for (int k = 0; k < d; ++k) {
            const Cx aik = a.at(i, k);
            if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
            kern::caxpy(aik.real(), aik.imag(), b.re_row(k), b.im_row(k), cr,
                        ci, static_cast<std::size_t>(d));
        }
    }
    return out;
}

Cx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "trace_product");
    const int d = a.dim();
    Cx acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) acc += a.at(i, j) * b.at(j, i);
    return acc;
}

double trace_product_hermitian(const ComplexMatrix& a,
                               const ComplexMatrix& b) {
    check_same_dim(a, b, "trace_product_hermitian");
    // Tr(ab) = sum_ij a_ij conj(b_ij) when b is Hermitian; the real part is
    // the plain dot product of the stacked split arrays.
    return kern::dot(a.re(), b.re(), a.size()) +
           kern::dot(a.im(), b.im(), a.size());
}

Cx trace(const ComplexMatrix& a) {
    Cx acc = 0.0;
    for (int i = 0; i < a.dim(); ++i) acc += a.at(i, i);
    return acc;
}

double frobenius_norm(const ComplexMatrix& a) {
    return std::sqrt(kern::dot(a.re(), a.re(), a.size()) +
                     kern::dot(a.im(), a.im(), a.size()));
}

double hermitian_deviation(const ComplexMatrix& a) {
    const int d = a.dim();
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        acc += std::norm(a.at(i, i) - std::conj(a.at(i, i)));
        for (int j = i + 1; j < d; ++j) {
            // |(a - a^+)_ij| = |(a - a^+)_ji| for the mirrored entry
            acc += 2.0 * std::norm(a.at(i, j) - std::conj(a.at(j, i)));
        }
    }
    return std::sqrt(acc);
}

void symmetrize(ComplexMatrix& a) {
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const Cx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.set(i, j, v);
            a.set(j, i, std::conj(v));
        }
    }
}

bool all_finite(const ComplexMatrix& a) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!std::isfinite(a.re()[k]) || !std::isfinite(a.im()[k]))
            return false;
    return true;
}

}  // namespace exclusion
