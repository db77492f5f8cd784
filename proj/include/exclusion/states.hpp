#pragma once

#include <vector>

#include "exclusion/matrix.hpp"

namespace exclusion {

// Construction refuses families beyond this many qubits (dimension 2^n).
inline constexpr int kDefaultQubitCap = 6;

struct DensityMatrix {
    ComplexMatrix mat;
    int n_qubits = 0;

    int dim() const { return mat.dim(); }
};

// Checks Hermiticity, unit trace and eigenvalue nonnegativity within the
// stated tolerances.
bool density_matrix_valid(const DensityMatrix& rho, double tol = 1e-9);

// Projector onto cos(theta/2)|0> + (-1)^x sin(theta/2)|1>.
// Requires 0 <= theta < pi/2.
DensityMatrix pure_qubit(double theta, int x);

// The 2^n product states indexed by bitstring. Index order is a big-endian
// counter: bit x1 is the most significant bit of the index and the leftmost
// tensor factor.
struct StateFamily {
    double theta = 0.0;
    int n_qubits = 0;
    std::vector<DensityMatrix> states;
    std::vector<double> weights;  // uniform 2^-n by default

    int size() const { return static_cast<int>(states.size()); }
    int dim() const { return states.empty() ? 0 : states.front().dim(); }
};

StateFamily build_family(double theta, int n, int n_cap = kDefaultQubitCap);

// (1/2) sum_i |lambda_i(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace exclusion
