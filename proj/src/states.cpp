#include "exclusion/states.hpp"

#include <cmath>

#include "exclusion/eig.hpp"

namespace exclusion {

bool density_matrix_valid(const DensityMatrix& rho, double tol) {
    if (rho.dim() != (1 << rho.n_qubits)) return false;
    if (!all_finite(rho.mat)) return false;
    if (hermitian_deviation(rho.mat) > tol) return false;
    if (std::abs(trace(rho.mat).real() - 1.0) > tol) return false;
    if (std::abs(trace(rho.mat).imag()) > tol) return false;
    return min_eigenvalue(rho.mat) >= -tol;
}

DensityMatrix pure_qubit(double theta, int x) {
    if (!(theta >= 0.0 && theta < M_PI / 2.0))
        throw ThetaOutOfRange("pure_qubit: theta = " + std::to_string(theta) +
                              " outside [0, pi/2)");
    const double c = std::cos(theta / 2.0);
    const double s = (x % 2 == 0 ? 1.0 : -1.0) * std::sin(theta / 2.0);
    DensityMatrix rho{ComplexMatrix(2), 1};
    rho.mat.set(0, 0, Cx{c * c, 0.0});
    rho.mat.set(0, 1, Cx{c * s, 0.0});
    rho.mat.set(1, 0, Cx{c * s, 0.0});
    rho.mat.set(1, 1, Cx{s * s, 0.0});
    return rho;
}

StateFamily build_family(double theta, int n, int n_cap) {
    if (n < 1) throw InvalidN("build_family: n = " + std::to_string(n));
    if (n > n_cap)
        throw NTooLarge("build_family: n = " + std::to_string(n) +
                        " exceeds cap " + std::to_string(n_cap));
    const DensityMatrix qubit[2] = {pure_qubit(theta, 0), pure_qubit(theta, 1)};

    StateFamily fam;
    fam.theta = theta;
    fam.n_qubits = n;
    const int count = 1 << n;
    fam.states.reserve(static_cast<std::size_t>(count));
    fam.weights.assign(static_cast<std::size_t>(count), 1.0 / count);
    for (int idx = 0; idx < count; ++idx) {
        // Bit x1 of the label is the most significant index bit and the
        // leftmost (coarse) kron factor.
        ComplexMatrix m = qubit[(idx >> (n - 1)) & 1].mat;
        for (int b = n - 2; b >= 0; --b)
            m = kron(m, qubit[(idx >> b) & 1].mat);
        fam.states.push_back(DensityMatrix{std::move(m), n});
    }
    return fam;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("trace_distance: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    const HermitianEig e = eig_hermitian(a.mat - b.mat);
    double acc = 0.0;
    for (double lam : e.eigenvalues) acc += std::abs(lam);
    return 0.5 * acc;
}

}  // namespace exclusion
