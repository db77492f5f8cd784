#pragma once

#include <vector>

#include "exclusion/states.hpp"

namespace exclusion {

// Candidate exclusion measurement: 2^n PSD effects summing to identity.
struct Povm {
    std::vector<ComplexMatrix> effects;

    int size() const { return static_cast<int>(effects.size()); }
    int dim() const { return effects.empty() ? 0 : effects.front().dim(); }
};

// PSD within -tol on the least eigenvalue and complete within tol Frobenius.
bool povm_valid(const Povm& m, double tol = 1e-8);

struct SolverConfig {
    int max_iters = 20000;
    double eps_primal = 1e-9;   // relative primal residual
    double eps_dual = 1e-9;     // relative dual residual
    // Penalty start value, rebalanced every 100 iterations. Small penalties
    // suit this problem: the effects live on the 1/2^n scale while the
    // objective gradient is order one.
    double admm_rho = 0.01;
    double over_relaxation = 1.6;
    double zero_threshold = 1e-6;  // sigma at or below counts as zero region
};

enum class SolveStatus { Converged, MaxIters };

// All scalar quantities are reported on the unweighted objective scale
// sum_x Tr(E_x rho_x); the weighted quantities behind the optimality
// criterion and the exclusion probability use the family weights.
struct SolveReport {
    double sigma = 0.0;
    double sigma_root = 0.0;  // sigma^(1/n)
    Povm povm;
    double dual_value = 0.0;  // certified lower bound, clamped at 0
    double gap = 0.0;         // sigma - dual_value
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    bool optimality_ok = false;
    SolveStatus status = SolveStatus::MaxIters;
};

// sum_x Tr(E_x rho_x), pairing effect x with state x. Real for valid inputs;
// lies in [0, 2^n].
double sigma_value(const Povm& m, const StateFamily& fam);

// Minimizes sigma over POVMs by ADMM: the affine constraint sum E = 1 and
// the per-effect PSD cones are split, each with a closed-form projection.
// Deterministic given the config; starts from E_x = identity/2^n.
SolveReport solve(const StateFamily& fam, const SolverConfig& cfg = {});

// Lower bound on min sigma from the shifted certificate
// Y = sym(sum_x rho_x E_x) + min(0, min_x lambda_min(rho_x - sym)) * 1.
// Returns Tr(Y), which may be negative (vacuous) far from optimality.
double dual_bound(const StateFamily& fam, const Povm& m);

struct OptimalityCheck {
    bool hermitian_ok = false;
    bool psd_ok = false;
};

// The iff optimality criterion on weighted states rt_x = w_x rho_x:
// (i) N = sum_x rt_x E_x Hermitian within tol, (ii) every rt_x - sym(N)
// PSD within -tol.
OptimalityCheck check_optimality(const StateFamily& fam, const Povm& m,
                                 double tol);

// 1 - sum_x w_x Tr(rho_x E_x), the success probability of naming one state
// the preparation is not.
double exclusion_probability(const StateFamily& fam, const Povm& m);

}  // namespace exclusion
