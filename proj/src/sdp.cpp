#include "exclusion/sdp.hpp"

#include <cmath>

#include "exclusion/eig.hpp"
#include "exclusion/kernels.hpp"

namespace exclusion {

namespace {

constexpr double kOptimalityTol = 1e-6;
constexpr int kRebalancePeriod = 100;
constexpr double kRebalanceRatio = 10.0;

void check_pairing(const Povm& m, const StateFamily& fam, const char* op) {
    if (m.size() != fam.size())
        throw IndexCountMismatch(std::string(op) + ": " +
                                 std::to_string(m.size()) + " effects vs " +
                                 std::to_string(fam.size()) + " states");
    if (m.dim() != fam.dim())
        throw DimensionMismatch(std::string(op) + ": effect dim " +
                                std::to_string(m.dim()) + " vs state dim " +
                                std::to_string(fam.dim()));
}

// N = sum_x scale_x rho_x E_x (not Hermitian in general).
ComplexMatrix weighted_cross_operator(const StateFamily& fam, const Povm& m,
                                      const std::vector<double>& scales) {
    const int d = fam.dim();
    ComplexMatrix n_op(d);
    ComplexMatrix term(d);
    for (int x = 0; x < fam.size(); ++x) {
        term = mul(fam.states[static_cast<std::size_t>(x)].mat,
                   m.effects[static_cast<std::size_t>(x)]);
        term.scale(scales[static_cast<std::size_t>(x)]);
        n_op += term;
    }
    return n_op;
}

double block_norm_sq(const std::vector<ComplexMatrix>& blocks) {
    double acc = 0.0;
    for (const ComplexMatrix& b : blocks)
        acc += kern::dot(b.re(), b.re(), b.size()) +
               kern::dot(b.im(), b.im(), b.size());
    return acc;
}

double block_diff_sq(const std::vector<ComplexMatrix>& a,
                     const std::vector<ComplexMatrix>& b) {
    double acc = 0.0;
    for (std::size_t x = 0; x < a.size(); ++x)
        acc += kern::diff_sq(a[x].re(), b[x].re(), a[x].size()) +
               kern::diff_sq(a[x].im(), b[x].im(), a[x].size());
    return acc;
}

// Orthogonal projection onto { E : sum_x E_x = identity }: every effect
// receives the same correction (identity - sum)/K.
void project_affine(std::vector<ComplexMatrix>& e) {
    const int d = e.front().dim();
    const auto count = static_cast<double>(e.size());
    ComplexMatrix corr(d);
    for (const ComplexMatrix& b : e) corr += b;
    corr.scale(-1.0 / count);
    for (int i = 0; i < d; ++i) corr.add_at(i, i, Cx{1.0 / count, 0.0});
    for (ComplexMatrix& b : e) b += corr;
}

}  // namespace

bool povm_valid(const Povm& m, double tol) {
    if (m.effects.empty()) return false;
    const int d = m.dim();
    ComplexMatrix sum(d);
    for (const ComplexMatrix& e : m.effects) {
        if (e.dim() != d || !all_finite(e)) return false;
        if (hermitian_deviation(e) > tol) return false;
        if (min_eigenvalue(e) < -tol) return false;
        sum += e;
    }
    for (int i = 0; i < d; ++i) sum.add_at(i, i, Cx{-1.0, 0.0});
    return frobenius_norm(sum) <= tol;
}

double sigma_value(const Povm& m, const StateFamily& fam) {
    check_pairing(m, fam, "sigma_value");
    double acc = 0.0;
    for (int x = 0; x < fam.size(); ++x)
        acc += trace_product_hermitian(m.effects[static_cast<std::size_t>(x)],
                                       fam.states[static_cast<std::size_t>(x)].mat);
    return acc;
}

SolveReport solve(const StateFamily& fam, const SolverConfig& cfg) {
    const int d = fam.dim();
    const int count = fam.size();
    const auto ucount = static_cast<std::size_t>(count);
    const double inv_count = 1.0 / count;

    // Splitting: X carries the affine constraint, Z the PSD cones, U the
    // scaled multiplier. The objective sum_x <rho_x, X_x> enters the
    // X-update as a gradient shift before the affine projection.
    std::vector<ComplexMatrix> x_blocks(ucount, ComplexMatrix(d));
    std::vector<ComplexMatrix> z_blocks(ucount, ComplexMatrix(d));
    std::vector<ComplexMatrix> z_prev(ucount, ComplexMatrix(d));
    std::vector<ComplexMatrix> u_blocks(ucount, ComplexMatrix(d));
    for (int x = 0; x < count; ++x) {
        for (int i = 0; i < d; ++i)
            z_blocks[static_cast<std::size_t>(x)].set(i, i, Cx{inv_count, 0.0});
    }
    x_blocks = z_blocks;

    JacobiWorkspace ws;
    double rho_pen = cfg.admm_rho;
    const double alpha = cfg.over_relaxation;

    SolveReport report;
    report.status = SolveStatus::MaxIters;
    int iter = 0;
    for (iter = 1; iter <= cfg.max_iters; ++iter) {
        // X-update: X = proj_affine(Z - U - rho/pen gradient).
        for (int x = 0; x < count; ++x) {
            const auto ux = static_cast<std::size_t>(x);
            ComplexMatrix& xb = x_blocks[ux];
            xb = z_blocks[ux];
            xb -= u_blocks[ux];
            kern::axpy(-1.0 / rho_pen, fam.states[ux].mat.re(), xb.re(),
                       xb.size());
            kern::axpy(-1.0 / rho_pen, fam.states[ux].mat.im(), xb.im(),
                       xb.size());
        }
        project_affine(x_blocks);

        // Z-update with over-relaxation, then the PSD projection.
        std::swap(z_prev, z_blocks);
        for (int x = 0; x < count; ++x) {
            const auto ux = static_cast<std::size_t>(x);
            ComplexMatrix& zb = z_blocks[ux];
            zb = x_blocks[ux];
            zb.scale(alpha);
            kern::axpy(1.0 - alpha, z_prev[ux].re(), zb.re(), zb.size());
            kern::axpy(1.0 - alpha, z_prev[ux].im(), zb.im(), zb.size());
            zb += u_blocks[ux];
            // U-update part 1: U <- X_hat + U (Z subtracted below once the
            // projection lands).
            u_blocks[ux] = zb;
            project_psd_inplace(zb, ws);
            u_blocks[ux] -= zb;
        }

        const double r_pri = std::sqrt(block_diff_sq(x_blocks, z_blocks));
        const double r_dual =
            rho_pen * std::sqrt(block_diff_sq(z_blocks, z_prev));
        const double scale_pri =
            std::max({1.0, std::sqrt(block_norm_sq(x_blocks)),
                      std::sqrt(block_norm_sq(z_blocks))});
        const double scale_dual =
            std::max(1.0, rho_pen * std::sqrt(block_norm_sq(u_blocks)));
        report.primal_residual = r_pri / scale_pri;
        report.dual_residual = r_dual / scale_dual;
        if (report.primal_residual <= cfg.eps_primal &&
            report.dual_residual <= cfg.eps_dual) {
            report.status = SolveStatus::Converged;
            break;
        }

        if (iter % kRebalancePeriod == 0) {
            if (r_pri > kRebalanceRatio * r_dual) {
                rho_pen *= 2.0;
                for (ComplexMatrix& u : u_blocks) u.scale(0.5);
            } else if (r_dual > kRebalanceRatio * r_pri) {
                rho_pen *= 0.5;
                for (ComplexMatrix& u : u_blocks) u.scale(2.0);
            }
        }
    }
    report.iterations = std::min(iter, cfg.max_iters);

    report.povm.effects = std::move(z_blocks);
    report.sigma = sigma_value(report.povm, fam);
    report.sigma_root =
        std::pow(std::max(report.sigma, 0.0), 1.0 / fam.n_qubits);
    // min sigma >= 0 always holds, so the certificate never loses validity
    // by clamping at zero.
    report.dual_value = std::max(0.0, dual_bound(fam, report.povm));
    report.gap = report.sigma - report.dual_value;
    const OptimalityCheck oc =
        check_optimality(fam, report.povm, kOptimalityTol);
    report.optimality_ok = oc.hermitian_ok && oc.psd_ok;
    return report;
}

double dual_bound(const StateFamily& fam, const Povm& m) {
    check_pairing(m, fam, "dual_bound");
    const int d = fam.dim();
    const std::vector<double> unit(static_cast<std::size_t>(fam.size()), 1.0);
    ComplexMatrix y = weighted_cross_operator(fam, m, unit);
    symmetrize(y);
    double worst = 0.0;
    for (int x = 0; x < fam.size(); ++x) {
        const ComplexMatrix gap =
            fam.states[static_cast<std::size_t>(x)].mat - y;
        worst = std::min(worst, min_eigenvalue(gap));
    }
    // rho_x - (Y + worst*1) is PSD for every x, so Tr(Y) + d*worst lower
    // bounds the optimum by weak duality.
    return trace(y).real() + d * worst;
}

OptimalityCheck check_optimality(const StateFamily& fam, const Povm& m,
                                 double tol) {
    check_pairing(m, fam, "check_optimality");
    ComplexMatrix n_op = weighted_cross_operator(fam, m, fam.weights);
    OptimalityCheck out;
    out.hermitian_ok = hermitian_deviation(n_op) <= tol;
    symmetrize(n_op);
    out.psd_ok = true;
    for (int x = 0; x < fam.size(); ++x) {
        ComplexMatrix gap = fam.states[static_cast<std::size_t>(x)].mat;
        gap.scale(fam.weights[static_cast<std::size_t>(x)]);
        gap -= n_op;
        if (min_eigenvalue(gap) < -tol) {
            out.psd_ok = false;
            break;
        }
    }
    return out;
}

double exclusion_probability(const StateFamily& fam, const Povm& m) {
    check_pairing(m, fam, "exclusion_probability");
    double acc = 0.0;
    for (int x = 0; x < fam.size(); ++x)
        acc += fam.weights[static_cast<std::size_t>(x)] *
               trace_product_hermitian(m.effects[static_cast<std::size_t>(x)],
                                       fam.states[static_cast<std::size_t>(x)].mat);
    return 1.0 - acc;
}

}  // namespace exclusion
