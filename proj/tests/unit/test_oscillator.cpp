#include <cmath>

#include "doctest.h"
#include "sqm/errors.hpp"
#include "sqm/oscillator.hpp"

using namespace sqm;

TEST_CASE("ground state is annihilated by both lowering operators") {
    const auto psi = zero_order_state({0, 0, 1}, 0.959);
    CHECK(ladder_left(Ladder::Lower, 1, psi).is_zero());
    CHECK(ladder_left(Ladder::Lower, 2, psi).is_zero());
}

TEST_CASE("number operators count quanta") {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2) {
            const auto psi = zero_order_state({n1, n2, 1}, 0.8);
            auto n_a = ladder_left(Ladder::Raise, 1, ladder_left(Ladder::Lower, 1, psi));
            auto n_b = ladder_left(Ladder::Raise, 2, ladder_left(Ladder::Lower, 2, psi));
            CHECK(max_coefficient_difference(n_a, complex(n1) * psi) < 1e-12);
            CHECK(max_coefficient_difference(n_b, complex(n2) * psi) < 1e-12);
        }
}

TEST_CASE("orthonormality") {
    const double omega = 1.1;
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a2 <= 3; ++a2)
            for (int b1 = 0; b1 <= 3; ++b1)
                for (int b2 = 0; b2 <= 3; ++b2) {
                    const auto pa = zero_order_state({a1, a2, 1}, omega);
                    const auto pb = zero_order_state({b1, b2, -1}, omega);
                    const complex overlap = integrate(star(dagger(pa), pb));
                    const double want = (a1 == b1 && a2 == b2) ? 1.0 : 0.0;
                    CHECK(std::abs(overlap - want) < 1e-12);
                }
}

TEST_CASE("zero-order states are star eigenfunctions of H0") {
    for (double omega : {0.5, 0.959})
        for (int n1 = 0; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= 4; ++n2) {
                const StateLabel label{n1, n2, 1};
                const auto psi = zero_order_state(label, omega);
                CHECK(max_coefficient_difference(apply_h0(psi), complex(kappa0(label, omega)) * psi) < 1e-12);
            }
}

TEST_CASE("kappa0 examples") {
    CHECK(kappa0({0, 0, 1}, 0.959) == doctest::Approx(0.959));
    CHECK(kappa0({1, 1, 1}, 1.0) == doctest::Approx(3.0));
    CHECK(kappa0({2, 0, 1}, 0.5) == doctest::Approx(1.5));
    CHECK_THROWS_AS(kappa0({0, 0, 1}, 0.0), Error);
}

TEST_CASE("energy0") {
    ModelParams p;
    p.B_z = 0.0;
    const double e00 = energy0({0, 0, 1}, p);
    CHECK(e00 == doctest::Approx(-0.5 * 0.6602 * 0.472 * 0.472));
    CHECK(e00 == doctest::Approx(-0.073545).epsilon(1e-4));
    p.B_z = 0.15;
    CHECK(energy0({0, 0, 1}, p) == doctest::Approx(e00 - 0.075));

    p.B_z = 0.0;
    double previous = -1e9;
    for (int n = 0; n <= 6; ++n) {
        const double e = energy0({n, 0, 1}, p);
        CHECK(e == -p.m * p.alpha * p.alpha / (2.0 * (n + 1) * (n + 1)));
        CHECK(e > previous);
        CHECK(e < 0.0);
        previous = e;
    }
}

TEST_CASE("zero_order_state errors") {
    CHECK_THROWS_AS(zero_order_state({0, 0, 1}, -1.0), Error);
    CHECK_THROWS_AS(zero_order_state({-1, 0, 1}, 1.0), Error);
    CHECK_THROWS_AS(zero_order_state({0, 0, 2}, 1.0), Error);
}
