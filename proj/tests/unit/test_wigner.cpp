#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "sqm/errors.hpp"
#include "sqm/oscillator.hpp"
#include "sqm/perturbation.hpp"
#include "sqm/wigner.hpp"

using namespace sqm;

namespace {

PhaseFunction first_order_ground_wigner(double bz) {
    ModelParams p;
    p.B_z = bz;
    const double w = omega1({0, 0, 1}, p);
    return wigner_of(first_order_coefficients({0, 0, 1}, p, w).to_phase_function()).function;
}

}  // namespace

TEST_CASE("zero-order ground Wigner function is a positive Gaussian") {
    const auto psi = zero_order_state({0, 0, 1}, 0.959);
    const auto res = wigner_of(psi);
    CHECK_FALSE(res.rescaled);
    CHECK(res.function.size() == 1);
    CHECK(std::abs(integrate(res.function) - 1.0) < 1e-14);
    const double peak = res.function({}).real();
    CHECK(peak == doctest::Approx(1.0 / (std::numbers::pi * std::numbers::pi)));
    const auto neg = negativity(res.function);
    CHECK(neg.negative_volume == 0.0);
    CHECK(neg.min_value > 0.0);
}

TEST_CASE("first excited zero-order state has a negative region") {
    const auto f = wigner_of(zero_order_state({1, 0, 1}, 0.959)).function;
    CHECK(f.is_diagonal());
    CHECK(f({}).real() < 0.0);
    SliceSpec spec;
    spec.q1_lo = -2.0;
    spec.q1_hi = 2.0;
    spec.q1_step = 0.1;
    CHECK(evaluate_slice(f, spec).min_value() < 0.0);
    CHECK(negativity(f).negative_volume > 0.0);
}

TEST_CASE("non-normalized input is rescaled") {
    const auto psi = 2.0 * zero_order_state({0, 0, 1}, 1.0);
    const auto res = wigner_of(psi);
    CHECK(res.rescaled);
    CHECK(res.input_norm == doctest::Approx(4.0));
    CHECK(std::abs(integrate(res.function) - 1.0) < 1e-14);
    CHECK_THROWS_AS(wigner_of(PhaseFunction(1.0)), Error);
}

TEST_CASE("Wigner functions are self-daggered and normalized") {
    for (double bz : {0.0, 0.15, 0.38}) {
        const auto f = first_order_ground_wigner(bz);
        CHECK(max_coefficient_difference(dagger(f), f) < 1e-15);
        CHECK(std::abs(integrate(f) - 1.0) < 1e-12);
        CHECK(std::abs(grid_integral(f) - 1.0) < 1e-3);
    }
    // Off-diagonal state.
    auto psi = PhaseFunction::basis(0.8, {0, 0, 0, 0}) + PhaseFunction::basis(0.8, {1, 0, 2, 0}, complex(0.0, 1.0));
    const auto f = wigner_of(psi).function;
    CHECK_FALSE(f.is_diagonal());
    CHECK(max_coefficient_difference(dagger(f), f) < 1e-15);
    CHECK(std::abs(integrate(f) - 1.0) < 1e-12);
    CHECK(std::abs(grid_integral(f) - 1.0) < 1e-3);
}

TEST_CASE("zero-order Wigner functions form an orthogonal idempotent family") {
    const double omega = 0.9;
    const double c = star_constant();
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const auto fa = wigner_of(zero_order_state({a, 3 - a, 1}, omega)).function;
            const auto fb = wigner_of(zero_order_state({b, 3 - b, 1}, omega)).function;
            const auto prod = star(fa, fb);
            if (a != b) CHECK(prod.is_zero());
            if (a == b) CHECK(max_coefficient_difference(prod, complex(c * c * c * c) * fa) < 1e-15);
        }
}

TEST_CASE("negativity is invariant under a global phase") {
    const auto s = first_order_coefficients({0, 0, 1}, ModelParams{}, 0.959).to_phase_function();
    const auto rotated = std::polar(1.0, 0.7) * s;
    const auto a = negativity(wigner_of(s).function);
    const auto b = negativity(wigner_of(rotated).function);
    CHECK(a.negative_volume == doctest::Approx(b.negative_volume).epsilon(1e-12));
    CHECK(a.min_value == doctest::Approx(b.min_value).epsilon(1e-12));
}

TEST_CASE("first-order ground state at strong field has negative regions") {
    const auto f = first_order_ground_wigner(0.38);
    const auto report = negativity(f);
    CHECK(report.radial);
    CHECK(report.min_value < 0.0);
    CHECK(report.negative_volume > 0.0);
    CHECK(report.captured_fraction > 1.0 - 1e-6);
    CHECK(f(report.grid_min_location).real() == doctest::Approx(report.min_value));
    // Slice through the minimum.
    SliceSpec spec;
    spec.q2 = report.grid_min_location.q2;
    spec.p2 = report.grid_min_location.p2;
    spec.q1_lo = 0.0;
    spec.q1_hi = 4.0;
    spec.q1_step = 0.01;
    CHECK(evaluate_slice(f, spec).min_value() < 0.0);
}

TEST_CASE("radial and tensor negativity estimates agree") {
    const auto f = first_order_ground_wigner(0.38);
    // Perturb by a tiny off-diagonal term to force the tensor route.
    auto g = f;
    g.add({1, 0, 0, 0}, 1e-12);
    g.add({0, 1, 0, 0}, 1e-12);
    NegativityOptions o;
    o.panels = 4;
    const auto tensor = negativity(g, o);
    CHECK_FALSE(tensor.radial);
    CHECK(tensor.negative_volume == doctest::Approx(negativity(f).negative_volume).epsilon(0.02));
}

TEST_CASE("box that is too small is rejected") {
    NegativityOptions o;
    o.q_half_width = 0.5;
    o.p_half_width = 0.5;
    CHECK_THROWS_AS(negativity(wigner_of(zero_order_state({0, 0, 1}, 1.0)).function, o), Error);
}

TEST_CASE("zero-field Fig-1 slice of the first-order ground state is positive") {
    const auto f = first_order_ground_wigner(0.0);
    const auto slice = evaluate_slice(f, SliceSpec{});
    CHECK(slice.min_value() > 0.0);
    CHECK(slice.values.front() == slice.max_value());
    CHECK(slice.values.back() < 1e-3 * slice.max_value());
}

TEST_CASE("slice peaks decrease with p1") {
    for (double bz : {0.0, 0.38}) {
        const auto f = first_order_ground_wigner(bz);
        double last = 1e9;
        for (double p1 : {2.3, 2.5, 2.9}) {
            SliceSpec spec;
            spec.p1_values = {p1};
            const double peak = evaluate_slice(f, spec).max_value();
            CHECK(peak < last);
            last = peak;
        }
    }
}

TEST_CASE("slice evaluation") {
    const auto f = wigner_of(zero_order_state({0, 0, 1}, 0.959)).function;
    SliceSpec spec;
    spec.p1_values = {0.0, 0.5};
    const auto s = evaluate_slice(f, spec, "ground");
    CHECK(s.values.size() == 2 * 81);
    CHECK(s.label == "ground");
    CHECK(s.omega == 0.959);
    CHECK(s.nodes.back().q1 == doctest::Approx(4.0));

    SliceSpec empty;
    empty.q1_lo = 1.0;
    empty.q1_hi = 0.0;
    CHECK(evaluate_slice(f, empty).values.empty());
    empty = SliceSpec{};
    empty.p1_values.clear();
    CHECK(evaluate_slice(f, empty).values.empty());
    spec.q1_step = 0.0;
    CHECK_THROWS_AS(evaluate_slice(f, spec), Error);

    const auto imag = PhaseFunction::basis(1.0, {1, 0, 0, 0});
    try {
        SliceSpec off_axis;
        off_axis.p1_values = {0.5};
        evaluate_slice(imag, off_axis);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImaginaryResidue);
    }
}

TEST_CASE("slice CSV") {
    const auto f = wigner_of(zero_order_state({0, 0, 1}, 0.959)).function;
    SliceSpec spec;
    spec.q1_hi = 0.1;
    std::ostringstream out;
    write_slice_csv(out, evaluate_slice(f, spec));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "q1,p1,q2,p2,f_w");
    std::getline(in, line);
    CHECK(line == "0,0,0,0,0.101321183642338");
}
