#pragma once

#include <vector>

#include "exclusion/states.hpp"

namespace exclusion {

enum class PauliKind { X, Y, Z };
enum class NoiseMode { Collective, Independent };

// Two-term Pauli mixture. p is the survival probability (noise does NOT
// act); j counts affected qubits in collective mode (the FIRST j tensor
// factors carry the Pauli word). Independent mode applies the same
// single-qubit mixture to every qubit and ignores j.
struct NoiseChannel {
    PauliKind kind = PauliKind::X;
    double p = 1.0;
    int j = 0;
    int n = 1;
    NoiseMode mode = NoiseMode::Collective;
};

ComplexMatrix pauli(PauliKind kind);

// The Pauli word sigma_kind^(x j) (x) identity^(x (n-j)).
ComplexMatrix pauli_word(PauliKind kind, int j, int n);

// Collective mode only: { sqrt(p) * identity, sqrt(1-p) * word }.
std::vector<ComplexMatrix> kraus_ops(const NoiseChannel& ch);

// p*rho + (1-p) W rho W^+ with W the Pauli word.
DensityMatrix apply_collective(const NoiseChannel& ch,
                               const DensityMatrix& rho);

// Per-qubit mixture on every tensor factor of every family member.
StateFamily apply_independent(PauliKind kind, double p,
                              const StateFamily& fam);

// Dispatch on ch.mode; weights pass through unchanged.
StateFamily noisy_family(const NoiseChannel& ch, const StateFamily& fam);

}  // namespace exclusion
