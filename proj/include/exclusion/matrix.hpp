#pragma once

#include <complex>
#include <vector>

#include "exclusion/errors.hpp"

namespace exclusion {

using Cx = std::complex<double>;

// Dense square complex matrix in split storage: real and imaginary parts
// live in separate row-major arrays so the kern:: routines see unit-stride
// doubles. Row i of each part starts at index i*dim.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim)
        : dim_(dim), re_(static_cast<std::size_t>(dim) * dim, 0.0),
          im_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return re_.size(); }

    Cx at(int i, int j) const {
        const std::size_t k = idx(i, j);
        return {re_[k], im_[k]};
    }
    void set(int i, int j, Cx v) {
        const std::size_t k = idx(i, j);
        re_[k] = v.real();
        im_[k] = v.imag();
    }
    void add_at(int i, int j, Cx v) {
        const std::size_t k = idx(i, j);
        re_[k] += v.real();
        im_[k] += v.imag();
    }

    double* re() { return re_.data(); }
    double* im() { return im_.data(); }
    const double* re() const { return re_.data(); }
    const double* im() const { return im_.data(); }
    double* re_row(int i) { return re_.data() + idx(i, 0); }
    double* im_row(int i) { return im_.data() + idx(i, 0); }
    const double* re_row(int i) const { return re_.data() + idx(i, 0); }
    const double* im_row(int i) const { return im_.data() + idx(i, 0); }

    void zero();
    void scale(double a);
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    int dim_ = 0;
    std::vector<double> re_, im_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(double a, ComplexMatrix m);

ComplexMatrix adjoint(const ComplexMatrix& a);

// Tensor product; the left factor is the coarse block index, so the first
// factor of a multi-qubit product addresses the most significant bit.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a*b) for equal dimensions; complex in general.
Cx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Re Tr(a*b) for Hermitian a, b: reduces to the Frobenius inner product of
// the split arrays, which is the hot path of the SDP objective.
double trace_product_hermitian(const ComplexMatrix& a, const ComplexMatrix& b);

Cx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
// ||a - adjoint(a)||_F
double hermitian_deviation(const ComplexMatrix& a);
// a <- (a + adjoint(a))/2
void symmetrize(ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

}  // namespace exclusion
