#include <random>

#include "doctest.h"
#include "exclusion/qom.hpp"

using namespace exclusion;

namespace {

DiscreteEpistemicState random_distribution(std::mt19937_64& rng, int size) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    DiscreteEpistemicState mu;
    mu.probs.resize(static_cast<std::size_t>(size));
    double sum = 0.0;
    for (double& p : mu.probs) {
        p = dist(rng);
        sum += p;
    }
    for (double& p : mu.probs) p /= sum;
    return mu;
}

DiscreteEpistemicState point_mass(int size, int at) {
    DiscreteEpistemicState mu;
    mu.probs.assign(static_cast<std::size_t>(size), 0.0);
    mu.probs[static_cast<std::size_t>(at)] = 1.0;
    return mu;
}

}  // namespace

TEST_CASE("overlap_w basics") {
    const DiscreteEpistemicState a{{0.5, 0.5, 0.0}};
    const DiscreteEpistemicState b{{0.0, 0.5, 0.5}};
    CHECK(overlap_w({a, a}) == doctest::Approx(1.0));
    CHECK(overlap_w({point_mass(3, 0), point_mass(3, 2)}) ==
          doctest::Approx(0.0));
    CHECK(overlap_w({a, b}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(overlap_w({a, point_mass(2, 0)}), LengthMismatch);
    CHECK_THROWS_AS(overlap_w({}), LengthMismatch);
}

TEST_CASE("overlap_w is permutation symmetric and monotone in list growth") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 50; ++rep) {
        const auto a = random_distribution(rng, 6);
        const auto b = random_distribution(rng, 6);
        const auto c = random_distribution(rng, 6);
        const double abc = overlap_w({a, b, c});
        CHECK(overlap_w({c, a, b}) == doctest::Approx(abc).epsilon(1e-14));
        CHECK(abc <= overlap_w({a, b}) + 1e-14);
        CHECK(abc <= overlap_w({a, c}) + 1e-14);
    }
}

TEST_CASE("product_model basics") {
    const EpistemicPair pair{point_mass(3, 1), point_mass(3, 2)};

    // n=1 returns the selected distribution unchanged.
    const auto one = product_model({pair}, {0});
    CHECK(one.probs == point_mass(3, 1).probs);

    // Point masses combine to the point mass at the joint index
    // (lexicographic, first qubit slowest).
    const auto joint = product_model({pair, pair}, {0, 1});
    REQUIRE(joint.probs.size() == 9);
    CHECK(joint.probs[static_cast<std::size_t>(1 * 3 + 2)] ==
          doctest::Approx(1.0));

    CHECK_THROWS_AS(product_model({pair, pair}, {0}), LengthMismatch);
    CHECK_THROWS_AS(product_model({pair}, {0}, 2), SizeOverflow);
}

TEST_CASE("product_model stays normalized") {
    std::mt19937_64 rng(59);
    const EpistemicPair pair{random_distribution(rng, 5),
                             random_distribution(rng, 5)};
    const auto joint = product_model({pair, pair, pair}, {1, 0, 1});
    CHECK(epistemic_valid(joint, 1e-10));
}

TEST_CASE("lemma1 known cases") {
    // Disjoint supports: every overlap is zero.
    const EpistemicPair disjoint{point_mass(4, 0), point_mass(4, 3)};
    const auto res0 = lemma1_check({disjoint, disjoint});
    CHECK(res0.lhs == doctest::Approx(0.0));
    CHECK(res0.rhs == doctest::Approx(0.0));

    // Identical distributions: both sides are 1.
    std::mt19937_64 rng(61);
    const auto mu = random_distribution(rng, 5);
    const auto res1 = lemma1_check({{mu, mu}, {mu, mu}, {mu, mu}});
    CHECK(res1.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res1.rhs == doctest::Approx(1.0).epsilon(1e-12));

    // Half-overlap pair duplicated: family overlap is the square.
    const DiscreteEpistemicState a{{0.5, 0.5, 0.0}};
    const DiscreteEpistemicState b{{0.0, 0.5, 0.5}};
    const auto res2 = lemma1_check({{a, b}, {a, b}});
    CHECK(res2.lhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(res2.rhs == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("lemma1 product law on random instances") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> ndist(1, 3);
    std::uniform_int_distribution<int> ldist(1, 8);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = ndist(rng);
        const int lsize = ldist(rng);
        std::vector<EpistemicPair> pairs;
        for (int q = 0; q < n; ++q)
            pairs.push_back({random_distribution(rng, lsize),
                             random_distribution(rng, lsize)});
        const auto res = lemma1_check(pairs);
        CHECK(std::abs(res.lhs - res.rhs) <=
              1e-10 * std::max(1.0, std::abs(res.rhs)));
    }
}

TEST_CASE("lemma2 exact trivial model") {
    // theta = 0, L = 1: point-mass distributions and a response equal to the
    // Born probabilities reproduce the statistics exactly, and w = sigma = 1.
    const StateFamily fam = build_family(0.0, 1);
    Povm m;
    ComplexMatrix half = ComplexMatrix::identity(2);
    half.scale(0.5);
    m.effects = {half, half};

    std::vector<DiscreteEpistemicState> mus(2, point_mass(1, 0));
    DiscreteResponse xi;
    xi.outcomes = {{0.5}, {0.5}};
    REQUIRE(response_valid(xi));

    const auto res = lemma2_gap(mus, xi, fam, m);
    CHECK(res.born_error <= 1e-12);
    CHECK(res.w == doctest::Approx(1.0));
    CHECK(res.sigma == doctest::Approx(1.0));
    CHECK(res.w <= res.sigma + 1e-12);
}

TEST_CASE("lemma2 disjoint-support model") {
    // Distinct ontic supports give w = 0, below any sigma.
    StateFamily fam = build_family(0.9, 1);
    Povm m;
    m.effects = {fam.states[1].mat, fam.states[0].mat};
    std::vector<DiscreteEpistemicState> mus = {point_mass(2, 0),
                                               point_mass(2, 1)};
    DiscreteResponse xi;
    const double p00 = trace_product_hermitian(m.effects[0], fam.states[0].mat);
    const double p11 = trace_product_hermitian(m.effects[1], fam.states[1].mat);
    xi.outcomes = {{p00, 1.0 - p11}, {1.0 - p00, p11}};
    REQUIRE(response_valid(xi));

    const auto res = lemma2_gap(mus, xi, fam, m);
    CHECK(res.w == doctest::Approx(0.0));
    CHECK(res.born_error <= 1e-12);
    CHECK(res.w <= res.sigma + 1e-12);
}

TEST_CASE("lemma2 inequality survives random approximate models") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> tdist(0.0, M_PI / 2.0 - 1e-6);
    std::uniform_int_distribution<int> ldist(1, 6);
    for (int rep = 0; rep < 1000; ++rep) {
        const StateFamily fam = build_family(tdist(rng), 1);
        Povm m;
        {
            // Random two-effect POVM: E0 = t|v><v|, E1 = 1 - E0.
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double phi = 2.0 * M_PI * u(rng);
            const double t = u(rng);
            ComplexMatrix e0(2);
            const double v0 = std::cos(phi / 2.0), v1 = std::sin(phi / 2.0);
            e0.set(0, 0, Cx{t * v0 * v0, 0.0});
            e0.set(0, 1, Cx{t * v0 * v1, 0.0});
            e0.set(1, 0, Cx{t * v0 * v1, 0.0});
            e0.set(1, 1, Cx{t * v1 * v1, 0.0});
            ComplexMatrix e1 = ComplexMatrix::identity(2);
            e1 -= e0;
            m.effects = {std::move(e0), std::move(e1)};
        }
        const int lsize = ldist(rng);
        std::vector<DiscreteEpistemicState> mus = {
            random_distribution(rng, lsize), random_distribution(rng, lsize)};
        DiscreteResponse xi;
        {
            // Random per-lambda response, normalized across the 2 outcomes.
            std::uniform_real_distribution<double> u(0.0, 1.0);
            xi.outcomes.assign(2, std::vector<double>(
                                      static_cast<std::size_t>(lsize)));
            for (int lam = 0; lam < lsize; ++lam) {
                const double r = u(rng);
                xi.outcomes[0][static_cast<std::size_t>(lam)] = r;
                xi.outcomes[1][static_cast<std::size_t>(lam)] = 1.0 - r;
            }
        }
        const auto res = lemma2_gap(mus, xi, fam, m);
        const int outcome_count = 2;
        CHECK(res.w <= res.sigma + outcome_count * res.born_error + 1e-12);
    }
}
