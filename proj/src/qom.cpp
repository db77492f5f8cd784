#include "exclusion/qom.hpp"

#include <algorithm>
#include <cmath>

namespace exclusion {

bool epistemic_valid(const DiscreteEpistemicState& mu, double tol) {
    if (mu.probs.empty()) return false;
    double sum = 0.0;
    for (double p : mu.probs) {
        if (!(p >= 0.0)) return false;
        sum += p;
    }
    return std::abs(sum - 1.0) <= tol;
}

bool response_valid(const DiscreteResponse& xi, double tol) {
    if (xi.outcomes.empty()) return false;
    const int ls = xi.lambda_size();
    for (const auto& row : xi.outcomes) {
        if (static_cast<int>(row.size()) != ls) return false;
        for (double v : row)
            if (!(v >= 0.0 && v <= 1.0 + tol)) return false;
    }
    for (int lam = 0; lam < ls; ++lam) {
        double sum = 0.0;
        for (const auto& row : xi.outcomes) sum += row[static_cast<std::size_t>(lam)];
        if (std::abs(sum - 1.0) > tol) return false;
    }
    return true;
}

double overlap_w(const std::vector<DiscreteEpistemicState>& mus) {
    if (mus.empty()) throw LengthMismatch("overlap_w: empty distribution list");
    const std::size_t ls = mus.front().probs.size();
    for (const auto& mu : mus)
        if (mu.probs.size() != ls)
            throw LengthMismatch("overlap_w: ontic sizes differ");
    double acc = 0.0;
    for (std::size_t lam = 0; lam < ls; ++lam) {
        double lo = mus.front().probs[lam];
        for (std::size_t i = 1; i < mus.size(); ++i)
            lo = std::min(lo, mus[i].probs[lam]);
        acc += lo;
    }
    return acc;
}

namespace {

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t cap) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap)
            throw SizeOverflow("ontic product space exceeds cap " +
                               std::to_string(cap));
    }
    return out;
}

}  // namespace

DiscreteEpistemicState product_model(const std::vector<EpistemicPair>& per_qubit,
                                     const std::vector<int>& bits,
                                     std::int64_t cap) {
    const int n = static_cast<int>(per_qubit.size());
    if (bits.size() != per_qubit.size())
        throw LengthMismatch("product_model: bitstring length " +
                             std::to_string(bits.size()) + " vs " +
                             std::to_string(n) + " qubit pairs");
    const int ls = per_qubit.front().first.lambda_size();
    for (const auto& [mu0, mu1] : per_qubit)
        if (mu0.lambda_size() != ls || mu1.lambda_size() != ls)
            throw LengthMismatch("product_model: ontic sizes differ");

    const std::int64_t total = checked_power(ls, n, cap);
    DiscreteEpistemicState out;
    out.probs.assign(static_cast<std::size_t>(total), 1.0);
    // Lexicographic order: lambda_1 is the slowest index.
    std::int64_t block = total;
    for (int q = 0; q < n; ++q) {
        block /= ls;
        const auto& mu = bits[static_cast<std::size_t>(q)] == 0
                             ? per_qubit[static_cast<std::size_t>(q)].first
                             : per_qubit[static_cast<std::size_t>(q)].second;
        for (std::int64_t idx = 0; idx < total; ++idx)
            out.probs[static_cast<std::size_t>(idx)] *=
                mu.probs[static_cast<std::size_t>((idx / block) % ls)];
    }
    return out;
}

Lemma1Result lemma1_check(const std::vector<EpistemicPair>& per_qubit,
                          std::int64_t cap) {
    const int n = static_cast<int>(per_qubit.size());
    if (n < 1) throw LengthMismatch("lemma1_check: no qubit pairs");
    std::vector<DiscreteEpistemicState> family;
    family.reserve(static_cast<std::size_t>(1) << n);
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int idx = 0; idx < (1 << n); ++idx) {
        for (int q = 0; q < n; ++q)
            bits[static_cast<std::size_t>(q)] = (idx >> (n - 1 - q)) & 1;
        family.push_back(product_model(per_qubit, bits, cap));
    }
    Lemma1Result out;
    out.lhs = overlap_w(family);
    out.rhs = 1.0;
    for (const auto& [mu0, mu1] : per_qubit) out.rhs *= overlap_w({mu0, mu1});
    return out;
}

Lemma2Result lemma2_gap(const std::vector<DiscreteEpistemicState>& mus,
                        const DiscreteResponse& xis, const StateFamily& fam,
                        const Povm& m) {
    if (static_cast<int>(mus.size()) != fam.size() ||
        xis.outcome_count() != m.size())
        throw LengthMismatch("lemma2_gap: model size does not match family");
    const int ls = mus.front().lambda_size();
    if (xis.lambda_size() != ls)
        throw LengthMismatch("lemma2_gap: response ontic size differs");

    Lemma2Result out;
    out.w = overlap_w(mus);
    out.sigma = sigma_value(m, fam);
    for (int x = 0; x < fam.size(); ++x) {
        const auto ux = static_cast<std::size_t>(x);
        double model_prob = 0.0;
        for (int lam = 0; lam < ls; ++lam)
            model_prob += mus[ux].probs[static_cast<std::size_t>(lam)] *
                          xis.outcomes[ux][static_cast<std::size_t>(lam)];
        const double born =
            trace_product_hermitian(m.effects[ux], fam.states[ux].mat);
        out.born_error = std::max(out.born_error, std::abs(model_prob - born));
    }
    return out;
}

}  // namespace exclusion
