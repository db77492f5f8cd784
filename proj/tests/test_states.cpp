#include <cmath>
#include <random>

#include "doctest.h"
#include "exclusion/eig.hpp"
#include "exclusion/states.hpp"

using namespace exclusion;

TEST_CASE("pure_qubit coincides at theta = 0") {
    const DensityMatrix a = pure_qubit(0.0, 0);
    const DensityMatrix b = pure_qubit(0.0, 1);
    CHECK(frobenius_norm(a.mat - b.mat) <= 1e-15);
    CHECK(a.mat.at(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("pure_qubit approaches the orthogonal pair at theta -> pi/2") {
    const double theta = M_PI / 2.0 - 1e-8;
    const DensityMatrix a = pure_qubit(theta, 0);
    const DensityMatrix b = pure_qubit(theta, 1);
    CHECK(std::abs(trace_product_hermitian(a.mat, b.mat)) <= 1e-7);
    // Both are the +-45 degree projectors in the limit.
    CHECK(a.mat.at(0, 1).real() == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(b.mat.at(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-7));
}

TEST_CASE("pure_qubit overlap at pi/3 is 1/4") {
    const double theta = M_PI / 3.0;
    CHECK(trace_product_hermitian(pure_qubit(theta, 0).mat,
                                  pure_qubit(theta, 1).mat) ==
          doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("pure_qubit rejects theta outside [0, pi/2)") {
    CHECK_THROWS_AS(pure_qubit(-0.1, 0), ThetaOutOfRange);
    CHECK_THROWS_AS(pure_qubit(M_PI / 2.0, 0), ThetaOutOfRange);
}

TEST_CASE("build_family wiring") {
    const double theta = 0.7;
    const StateFamily fam = build_family(theta, 2);
    REQUIRE(fam.size() == 4);
    CHECK(fam.weights[0] == doctest::Approx(0.25));

    // Index 0b01: first qubit bit 0, second bit 1.
    const ComplexMatrix want =
        kron(pure_qubit(theta, 0).mat, pure_qubit(theta, 1).mat);
    CHECK(frobenius_norm(fam.states[1].mat - want) <= 1e-14);
}

TEST_CASE("build_family at theta = 0 collapses to one state") {
    const StateFamily fam = build_family(0.0, 3);
    for (const DensityMatrix& rho : fam.states)
        CHECK(frobenius_norm(rho.mat - fam.states[0].mat) <= 1e-15);
}

TEST_CASE("build_family argument validation") {
    CHECK_THROWS_AS(build_family(0.3, 0), InvalidN);
    CHECK_THROWS_AS(build_family(0.3, 7), NTooLarge);
    CHECK_THROWS_AS(build_family(-0.3, 2), ThetaOutOfRange);
    CHECK_NOTHROW(build_family(0.3, 3, 3));
}

TEST_CASE("family members are rank-1 projectors") {
    for (double theta : {0.0, 0.2, 0.9, 1.5}) {
        for (int n : {1, 2, 3}) {
            const StateFamily fam = build_family(theta, n);
            for (const DensityMatrix& rho : fam.states) {
                const HermitianEig e = eig_hermitian(rho.mat);
                CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-9));
                CHECK(std::abs(e.eigenvalues[1]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("born rule factorizes over product effects") {
    // Product effects against product states: the joint probability is the
    // product of the per-qubit probabilities.
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double theta = 0.8;
    const StateFamily fam = build_family(theta, 3);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix factors[3] = {ComplexMatrix(2), ComplexMatrix(2),
                                    ComplexMatrix(2)};
        for (ComplexMatrix& f : factors) {
            // Random single-qubit effect: t * |v><v| with t in [0,1].
            const double phi = 2.0 * M_PI * dist(rng);
            const double t = dist(rng);
            const Cx v0{std::cos(phi / 2.0), 0.0};
            const Cx v1{std::sin(phi / 2.0) * std::cos(phi),
                        std::sin(phi / 2.0) * std::sin(phi)};
            f.set(0, 0, t * v0 * std::conj(v0));
            f.set(0, 1, t * v0 * std::conj(v1));
            f.set(1, 0, t * v1 * std::conj(v0));
            f.set(1, 1, t * v1 * std::conj(v1));
        }
        const ComplexMatrix joint = kron(kron(factors[0], factors[1]), factors[2]);
        for (int idx = 0; idx < fam.size(); ++idx) {
            const double lhs =
                trace_product_hermitian(joint, fam.states[static_cast<std::size_t>(idx)].mat);
            double rhs = 1.0;
            for (int q = 0; q < 3; ++q) {
                const int bit = (idx >> (2 - q)) & 1;
                rhs *= trace_product_hermitian(factors[q],
                                               pure_qubit(theta, bit).mat);
            }
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("trace_distance basics") {
    const DensityMatrix a = pure_qubit(0.9, 0);
    CHECK(trace_distance(a, a) == doctest::Approx(0.0));

    // Orthogonal pure states sit at distance 1.
    DensityMatrix p0{ComplexMatrix(2), 1}, p1{ComplexMatrix(2), 1};
    p0.mat.set(0, 0, Cx{1.0, 0.0});
    p1.mat.set(1, 1, Cx{1.0, 0.0});
    CHECK(trace_distance(p0, p1) == doctest::Approx(1.0));

    CHECK_THROWS_AS(trace_distance(p0, DensityMatrix{ComplexMatrix(4), 2}),
                    DimensionMismatch);
}

TEST_CASE("paired-state trace distance equals sin(theta)") {
    CHECK(trace_distance(pure_qubit(M_PI / 4.0, 0), pure_qubit(M_PI / 4.0, 1)) ==
          doctest::Approx(std::sin(M_PI / 4.0)).epsilon(1e-12));
    for (int i = 0; i < 100; ++i) {
        const double theta = (M_PI / 2.0 - 1e-9) * i / 99.0;
        const double got =
            trace_distance(pure_qubit(theta, 0), pure_qubit(theta, 1));
        CHECK(std::abs(got - std::sin(theta)) <= 1e-10);
    }
}

TEST_CASE("family members satisfy density-matrix invariants") {
    const StateFamily fam = build_family(1.1, 2);
    for (const DensityMatrix& rho : fam.states)
        CHECK(density_matrix_valid(rho));
}
