#include "exclusion/channels.hpp"

#include <cmath>

namespace exclusion {

namespace {

void check_collective(const NoiseChannel& ch, const char* op) {
    if (ch.mode != NoiseMode::Collective)
        throw WrongMode(std::string(op) + ": channel is not collective");
    if (ch.j < 0 || ch.j > ch.n)
        throw DimensionMismatch(std::string(op) + ": j = " +
                                std::to_string(ch.j) + " outside 0.." +
                                std::to_string(ch.n));
}

DensityMatrix mix_single(PauliKind kind, double p, const DensityMatrix& rho) {
    const ComplexMatrix s = pauli(kind);
    ComplexMatrix out = mul(mul(s, rho.mat), adjoint(s));
    out.scale(1.0 - p);
    ComplexMatrix kept = rho.mat;
    kept.scale(p);
    out += kept;
    return DensityMatrix{std::move(out), rho.n_qubits};
}

}  // namespace

ComplexMatrix pauli(PauliKind kind) {
    ComplexMatrix m(2);
    switch (kind) {
        case PauliKind::X:
            m.set(0, 1, Cx{1.0, 0.0});
            m.set(1, 0, Cx{1.0, 0.0});
            break;
        case PauliKind::Y:
            m.set(0, 1, Cx{0.0, -1.0});
            m.set(1, 0, Cx{0.0, 1.0});
            break;
        case PauliKind::Z:
            m.set(0, 0, Cx{1.0, 0.0});
            m.set(1, 1, Cx{-1.0, 0.0});
            break;
    }
    return m;
}

ComplexMatrix pauli_word(PauliKind kind, int j, int n) {
    ComplexMatrix word = ComplexMatrix::identity(1);
    const ComplexMatrix s = pauli(kind);
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    for (int i = 0; i < n; ++i) word = kron(word, i < j ? s : id2);
    return word;
}

std::vector<ComplexMatrix> kraus_ops(const NoiseChannel& ch) {
    check_collective(ch, "kraus_ops");
    const int dim = 1 << ch.n;
    ComplexMatrix keep = ComplexMatrix::identity(dim);
    keep.scale(std::sqrt(ch.p));
    ComplexMatrix flip = pauli_word(ch.kind, ch.j, ch.n);
    flip.scale(std::sqrt(1.0 - ch.p));
    return {std::move(keep), std::move(flip)};
}

DensityMatrix apply_collective(const NoiseChannel& ch,
                               const DensityMatrix& rho) {
    check_collective(ch, "apply_collective");
    if (rho.dim() != (1 << ch.n))
        throw DimensionMismatch("apply_collective: state dim " +
                                std::to_string(rho.dim()) + " vs channel 2^" +
                                std::to_string(ch.n));
    if (ch.j == 0 || ch.p == 1.0) return rho;
    const ComplexMatrix word = pauli_word(ch.kind, ch.j, ch.n);
    ComplexMatrix out = mul(mul(word, rho.mat), adjoint(word));
    out.scale(1.0 - ch.p);
    ComplexMatrix kept = rho.mat;
    kept.scale(ch.p);
    out += kept;
    return DensityMatrix{std::move(out), rho.n_qubits};
}

StateFamily apply_independent(PauliKind kind, double p,
                              const StateFamily& fam) {
    // Rebuilds the per-qubit mixtures from the family's theta; the input
    // must be the unperturbed product family.
    const int n = fam.n_qubits;
    const DensityMatrix noisy[2] = {
        mix_single(kind, p, pure_qubit(fam.theta, 0)),
        mix_single(kind, p, pure_qubit(fam.theta, 1))};

    StateFamily out;
    out.theta = fam.theta;
    out.n_qubits = n;
    out.weights = fam.weights;
    out.states.reserve(fam.states.size());
    for (int idx = 0; idx < fam.size(); ++idx) {
        ComplexMatrix m = noisy[(idx >> (n - 1)) & 1].mat;
        for (int b = n - 2; b >= 0; --b)
            m = kron(m, noisy[(idx >> b) & 1].mat);
        out.states.push_back(DensityMatrix{std::move(m), n});
    }
    return out;
}

StateFamily noisy_family(const NoiseChannel& ch, const StateFamily& fam) {
    if (ch.n != fam.n_qubits)
        throw DimensionMismatch("noisy_family: channel n = " +
                                std::to_string(ch.n) + " vs family n = " +
                                std::to_string(fam.n_qubits));
    if (ch.mode == NoiseMode::Independent)
        return apply_independent(ch.kind, ch.p, fam);
    StateFamily out;
    out.theta = fam.theta;
    out.n_qubits = fam.n_qubits;
    out.weights = fam.weights;
    out.states.reserve(fam.states.size());
    for (const DensityMatrix& rho : fam.states)
        out.states.push_back(apply_collective(ch, rho));
    return out;
}

}  // namespace exclusion
