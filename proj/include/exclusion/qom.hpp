#pragma once

#include <cstdint>
#include <vector>

#include "exclusion/sdp.hpp"

namespace exclusion {

// Finite-sample stand-ins for the ontological-model objects: distributions
// and response functions over a discrete ontic space of size L. Integrals
// over the ontic space become plain sums, which is all the product and
// exclusion identities below need.

inline constexpr std::int64_t kDefaultOnticCap = 1'000'000;

struct DiscreteEpistemicState {
    std::vector<double> probs;  // nonnegative, sums to 1 within 1e-12

    int lambda_size() const { return static_cast<int>(probs.size()); }
};

struct DiscreteResponse {
    // outcomes[k][lambda] in [0,1]; for each lambda the outcomes sum to 1.
    std::vector<std::vector<double>> outcomes;

    int lambda_size() const {
        return outcomes.empty() ? 0 : static_cast<int>(outcomes.front().size());
    }
    int outcome_count() const { return static_cast<int>(outcomes.size()); }
};

bool epistemic_valid(const DiscreteEpistemicState& mu, double tol = 1e-12);
bool response_valid(const DiscreteResponse& xi, double tol = 1e-12);

// sum_lambda min over the list; in [0,1]. Zero overlap is the ontologically
// distinct case.
double overlap_w(const std::vector<DiscreteEpistemicState>& mus);

// Product distribution over Lambda^n selected by the bitstring: qubit i
// contributes mu0 or mu1 of its pair. Enumeration is lexicographic in
// (lambda_1, ..., lambda_n), lambda_1 slowest.
using EpistemicPair = std::pair<DiscreteEpistemicState, DiscreteEpistemicState>;
DiscreteEpistemicState product_model(const std::vector<EpistemicPair>& per_qubit,
                                     const std::vector<int>& bits,
                                     std::int64_t cap = kDefaultOnticCap);

struct Lemma1Result {
    double lhs = 0.0;  // overlap of all 2^n product distributions
    double rhs = 0.0;  // product of per-qubit pair overlaps
};

Lemma1Result lemma1_check(const std::vector<EpistemicPair>& per_qubit,
                          std::int64_t cap = kDefaultOnticCap);

struct Lemma2Result {
    double w = 0.0;
    double sigma = 0.0;
    // Worst-case deviation of the model's outcome statistics from
    // Tr(E_x rho_x); with deviation eps the bound w <= sigma + K*eps holds,
    // K the outcome count.
    double born_error = 0.0;
};

Lemma2Result lemma2_gap(const std::vector<DiscreteEpistemicState>& mus,
                        const DiscreteResponse& xis, const StateFamily& fam,
                        const Povm& m);

}  // namespace exclusion
