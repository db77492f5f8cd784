#pragma once

#include <vector>

#include "exclusion/matrix.hpp"

namespace exclusion {

// Relative tolerance accepted on ||a - a^+||_F before a matrix is rejected
// as non-Hermitian. Iterative callers accumulate rounding asymmetry, so the
// input is always symmetrized before decomposing.
inline constexpr double kHermitianTol = 1e-9;

struct HermitianEig {
    std::vector<double> eigenvalues;  // nonincreasing
    // Row k holds the eigenvector for eigenvalues[k]; rows are orthonormal
    // and a = sum_k lambda_k v_k v_k^+.
    ComplexMatrix vectors;
};

// Scratch space reused across repeated decompositions of equal dimension.
class JacobiWorkspace {
  public:
    void resize(int dim);
    ComplexMatrix a;        // working copy, driven to diagonal form
    ComplexMatrix vectors;  // accumulated rotations, rows = eigenvectors
    std::vector<double> eigenvalues;
    std::vector<int> order;
};

// Cyclic complex Jacobi on the symmetrized input. Throws NotHermitian when
// the input violates kHermitianTol.
HermitianEig eig_hermitian(const ComplexMatrix& a);

// In-place variant for hot loops: decomposes ws.a (destroyed) into
// ws.eigenvalues / ws.vectors without allocating. `a` must already be
// Hermitian-symmetrized by the caller.
void eig_hermitian_inplace(JacobiWorkspace& ws);

// Frobenius-nearest PSD matrix: eigenvalues clamped at zero, reconstructed.
ComplexMatrix project_psd(const ComplexMatrix& a);
void project_psd_inplace(ComplexMatrix& a, JacobiWorkspace& ws);

double min_eigenvalue(const ComplexMatrix& a);

}  // namespace exclusion
