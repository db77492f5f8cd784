#include <cmath>

#include "doctest.h"
#include "exclusion/bounds.hpp"
#include "exclusion/channels.hpp"
#include "exclusion/sweep.hpp"

using namespace exclusion;

TEST_CASE("theta_min closed form") {
    CHECK(theta_min(1) == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
    CHECK(theta_min(2) == doctest::Approx(M_PI / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(theta_min(0), InvalidN);

    double prev = theta_min(1);
    for (int n = 2; n <= 12; ++n) {
        const double t = theta_min(n);
        CHECK(t < prev);
        CHECK(t > 0.0);
        prev = t;
    }
}

TEST_CASE("onset_sin known values") {
    CHECK(onset_sin(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(onset_sin(2) == doctest::Approx(0.70711).epsilon(1e-4));
    CHECK(onset_sin(3) == doctest::Approx(0.4869).epsilon(2e-4));
    CHECK(onset_sin(4) == doctest::Approx(0.36534).epsilon(1e-4));
    // The n=4 angle rounds to 0.3740; its sine does not. onset_sin must
    // report the sine.
    CHECK(theta_min(4) == doctest::Approx(0.37399).epsilon(1e-4));
    CHECK(std::abs(onset_sin(4) - 0.3740) > 5e-3);

    double prev = 1.0 + 1e-12;
    for (int n = 1; n <= 12; ++n) {
        const double d = onset_sin(n);
        CHECK(d < prev);
        CHECK(d > 0.0);
        prev = d;
    }
}

TEST_CASE("bound_table_row is consistent") {
    const BoundTable row = bound_table_row(3);
    CHECK(row.n == 3);
    CHECK(row.d_n == doctest::Approx(std::sin(row.theta_min)).epsilon(1e-15));
}

TEST_CASE("lift_measurement of the uniform POVM stays uniform") {
    Povm uni;
    ComplexMatrix e = ComplexMatrix::identity(2);
    e.scale(0.5);
    uni.effects = {e, e};
    const Povm lifted = lift_measurement(uni, 1);
    REQUIRE(lifted.size() == 4);
    CHECK(povm_valid(lifted, 1e-12));
    for (const ComplexMatrix& f : lifted.effects)
        CHECK(frobenius_norm(f - 0.25 * ComplexMatrix::identity(4)) <= 1e-14);
}

TEST_CASE("lift_measurement validates input") {
    Povm bogus;
    bogus.effects = {ComplexMatrix::identity(2)};
    CHECK_THROWS_AS(lift_measurement(bogus, 1), InvalidPovm);

    Povm wrong_sum;
    wrong_sum.effects = {ComplexMatrix::identity(2),
                         ComplexMatrix::identity(2)};
    CHECK_THROWS_AS(lift_measurement(wrong_sum, 1), InvalidPovm);
}

TEST_CASE("lifting the orthogonal-exclusion POVM clears the noisy qubit") {
    // Exact |+>/|-> exclusion projectors lifted to n=2 with the first qubit
    // fully noisy: sigma stays at the (near-zero) small-system value.
    const double s = 1.0 - 1e-9;
    const StateFamily small = build_family(std::asin(s), 1);
    Povm swap;
    for (double sgn : {-1.0, 1.0}) {
        ComplexMatrix e(2);
        e.set(0, 0, Cx{0.5, 0.0});
        e.set(0, 1, Cx{sgn * 0.5, 0.0});
        e.set(1, 0, Cx{sgn * 0.5, 0.0});
        e.set(1, 1, Cx{0.5, 0.0});
        swap.effects.push_back(std::move(e));
    }
    const Povm lifted = lift_measurement(swap, 1);
    CHECK(povm_valid(lifted, 1e-12));

    SweepSpec spec;
    spec.n = 2;
    spec.noise = NoiseDesc{PauliKind::X, 0.0, 1, NoiseMode::Collective};
    const StateFamily noisy = family_at(spec, s);
    const double small_sigma = sigma_value(swap, small);
    CHECK(sigma_value(lifted, noisy) ==
          doctest::Approx(small_sigma).epsilon(1e-9));
    CHECK(sigma_value(lifted, noisy) <= 1e-6);
}

TEST_CASE("lifted optimal POVM reproduces the small-system sigma") {
    // Solve 2 qubits noiseless, lift onto the 3-qubit one-noisy family; the
    // evaluated sigma must match the small solve regardless of p and kind.
    for (double s : {0.5, 0.75}) {
        const StateFamily small = build_family(std::asin(s), 2);
        const SolveReport small_rep = solve(small);
        REQUIRE(small_rep.status == SolveStatus::Converged);
        const Povm lifted = lift_measurement(small_rep.povm, 2);

        for (PauliKind kind : {PauliKind::X, PauliKind::Z}) {
            for (double p : {0.25, 0.5}) {
                SweepSpec spec;
                spec.n = 3;
                spec.noise = NoiseDesc{kind, p, 1, NoiseMode::Collective};
                const StateFamily noisy = family_at(spec, s);
                CHECK(sigma_value(lifted, noisy) <=
                      small_rep.sigma + 1e-6);
                CHECK(sigma_value(lifted, noisy) ==
                      doctest::Approx(small_rep.sigma).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("double lift covers two noisy qubits") {
    const double s = 0.75;
    const StateFamily small = build_family(std::asin(s), 1);
    const SolveReport small_rep = solve(small);
    const Povm lifted = lift_measurement(lift_measurement(small_rep.povm, 1), 2);
    REQUIRE(lifted.size() == 8);
    // Lifting adds no error of its own; the solver's 1e-8 feasibility
    // carries through.
    CHECK(povm_valid(lifted, 1e-8));

    SweepSpec spec;
    spec.n = 3;
    spec.noise = NoiseDesc{PauliKind::Y, 0.5, 2, NoiseMode::Collective};
    const StateFamily noisy = family_at(spec, s);
    CHECK(sigma_value(lifted, noisy) ==
          doctest::Approx(small_rep.sigma).epsilon(1e-8));
}
