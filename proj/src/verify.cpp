#include "sqm/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "sqm/bohlin.hpp"
#include "sqm/bopp_oracle.hpp"
#include "sqm/errors.hpp"
#include "sqm/fock.hpp"
#include "sqm/oscillator.hpp"
#include "sqm/perturbation.hpp"
#include "sqm/phase_function.hpp"
#include "sqm/wigner.hpp"

namespace sqm {

namespace {

PhaseFunction random_function(std::mt19937& rng, double omega, int max_index, int n_terms) {
    std::uniform_int_distribution<int> idx(0, max_index);
    std::normal_distribution<double> coef(0.0, 1.0);
    PhaseFunction f(omega);
    for (int t = 0; t < n_terms; ++t) f.add({idx(rng), idx(rng), idx(rng), idx(rng)}, complex(coef(rng), coef(rng)));
    return f;
}

CheckResult threshold(std::string name, double value, double tol) {
    return {std::move(name), value <= tol, fmt::format("{:.3e} (tolerance {:.0e})", value, tol)};
}

CheckResult heisenberg() {
    const complex I{0.0, 1.0};
    double worst = 0.0;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (int mode : {1, 2}) {
                const auto f = PhaseFunction::basis(0.959, mode == 1 ? BasisIndex{m, n, 1, 1} : BasisIndex{1, 2, m, n});
                const auto comm = q_star(mode, p_star(mode, f)) - p_star(mode, q_star(mode, f));
                worst = std::max(worst, max_coefficient_difference(comm, I * f));
            }
    return threshold("moyal commutator [q*, p*] f = i f", worst, 1e-12);
}

CheckResult associativity_and_dagger(bool dagger_check) {
    std::mt19937 rng(20240611);
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_function(rng, 0.959, 3, 6);
        const auto g = random_function(rng, 0.959, 3, 6);
        const auto h = random_function(rng, 0.959, 3, 6);
        worst = std::max(worst, dagger_check
                                    ? max_coefficient_difference(dagger(star(f, g)), star(dagger(g), dagger(f)))
                                    : max_coefficient_difference(star(star(f, g), h), star(f, star(g, h))));
    }
    return threshold(dagger_check ? "dagger anti-automorphism" : "star associativity", worst, 1e-12);
}

CheckResult bopp_product_rule() {
    const double omega = 0.959;
    const double c = star_constant();
    const BoppOptions opts{.truncation = std::nullopt, .output_stride = 20, .interior_half_width = 2.0};
    auto grid = [&](int m, int n) {
        return sample_grid([=](double q, double p) { return mode_element(m, n, omega, q, p); }, 6.0, 0.05);
    };
    double worst = 0.0;
    for (auto [m, n, k, l] : {std::array{0, 0, 0, 0}, std::array{1, 0, 0, 1}, std::array{2, 1, 1, 2}}) {
        const auto out = bopp_star_oracle(grid(m, n), grid(k, l), opts);
        for (int i = 0; i < out.nq; ++i)
            for (int j = 0; j < out.np; ++j) {
                const complex want = n == k ? c * mode_element(m, l, omega, out.q(i), out.p(j)) : complex{};
                worst = std::max(worst, std::abs(out.at(i, j) - want));
            }
    }
    return threshold("basis product rule vs all-orders Bopp oracle", worst, 1e-8);
}

CheckResult ladder_commutator() {
    const int cutoff = 6;
    const auto l = build_ladders(cutoff);
    const auto ca = l.a * l.a_dag - l.a_dag * l.a;
    double worst = 0.0;
    for (int m1 = 0; m1 < cutoff; ++m1)
        for (int m2 = 0; m2 < cutoff; ++m2)
            for (int n1 = 0; n1 < cutoff; ++n1)
                for (int n2 = 0; n2 < cutoff; ++n2)
                    worst = std::max(worst, std::abs(ca.element(m1, m2, n1, n2) - ((m1 == n1 && m2 == n2) ? 1.0 : 0.0)));
    return threshold("[a, a^dag] = 1 on the truncation interior", worst, 1e-13);
}

CheckResult selection_rules() {
    int violations = 0;
    for (int m1 = 0; m1 <= 6; ++m1)
        for (int m2 = 0; m2 <= 6; ++m2)
            for (int n1 = 0; n1 <= 6; ++n1)
                for (int n2 = 0; n2 <= 6; ++n2) {
                    const double v = h1_element({m1, m2, n1, n2}, 1.0, 1.0);
                    const int d1 = std::abs(m1 - n1), d2 = std::abs(m2 - n2);
                    const bool allowed = d1 % 2 == 0 && d2 % 2 == 0 && d1 + d2 <= 6;
                    if (!allowed && v != 0.0) ++violations;
                    if (!exactly_equal(sextic_element_exact({n1, n2, m1, m2}), sextic_element_exact({m1, m2, n1, n2})))
                        ++violations;
                    if (h1_element({m2, m1, n2, n1}, 1.0, 1.0) != v) ++violations;
                }
    return {"selection rules, hermiticity, mode swap (indices <= 6)", violations == 0,
            fmt::format("{} violations", violations)};
}

CheckResult frequency_equation(const ModelParams& params) {
    try {
        const StateLabel g{0, 0, params.spin};
        const double w = resolve_omega(g, params);
        const double k = kappa1(g, params, w);
        if (params.fixed_omega) return {"kappa1(omega1) = alpha", true, "skipped: omega fixed"};
        return threshold("kappa1(omega1) = alpha", std::abs(k - params.alpha), 1e-9);
    } catch (const Error& e) {
        return {"kappa1(omega1) = alpha", false, e.what()};
    }
}

CheckResult wigner_normalization(const ModelParams& params) {
    try {
        const StateLabel g{0, 0, params.spin};
        const double w = resolve_omega(g, params);
        const auto f = wigner_of(first_order_coefficients(g, params, w).to_phase_function()).function;
        const double analytic = std::abs(integrate(f) - 1.0);
        const double grid = std::abs(grid_integral(f) - 1.0);
        return {"wigner normalization (analytic, grid)", analytic < 1e-12 && grid < 1e-3,
                fmt::format("analytic {:.3e}, grid {:.3e}", analytic, grid)};
    } catch (const Error& e) {
        return {"wigner normalization (analytic, grid)", false, e.what()};
    }
}

CheckResult gaussian_baseline() {
    const auto r = negativity(wigner_of(zero_order_state({0, 0, 1}, 0.959)).function);
    return {"zero-order ground wigner is non-negative", r.negative_volume == 0.0 && r.min_value > 0.0,
            fmt::format("eta {:.3e}, min {:.3e}", r.negative_volume, r.min_value)};
}

CheckResult bohlin_suite(const ModelParams& params) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const CartesianState s{u(rng), u(rng), u(rng), u(rng)};
        const auto o = bohlin_inverse(s);
        const auto b = bohlin_forward(o.q1, o.q2, o.p1, o.p2);
        worst = std::max({worst, std::abs(b.x - s.x), std::abs(b.y - s.y), std::abs(b.Px - s.Px), std::abs(b.Py - s.Py)});
        const auto h = hamiltonian_consistency(o, params);
        worst = std::max({worst, std::abs(h.kinetic_residual) / (1.0 + std::abs(h.kinetic_mapped)),
                          std::abs(h.diamagnetic_residual) / (1.0 + std::abs(h.diamagnetic_mapped))});
    }
    return threshold("bohlin roundtrip and hamiltonian residuals", worst, 1e-12);
}

CheckResult zero_field_limit(const ModelParams& params) {
    ModelParams p = params;
    p.B_z = 0.0;
    double worst = 0.0;
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n1 + n2 <= 4; ++n2) {
            const double n = n1 + n2 + 1;
            worst = std::max(worst, std::abs(energy0({n1, n2, 1}, p) + p.m * p.alpha * p.alpha / (2.0 * n * n)));
        }
    return {"zero-field limit of E0", worst == 0.0, fmt::format("{:.3e}", worst)};
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const ModelParams& params) {
    std::vector<CheckResult> out;
    out.push_back({"delta1(0,0) = 20", delta1(0, 0) == 20.0, fmt::format("{}", delta1(0, 0))});
    out.push_back(heisenberg());
    out.push_back(associativity_and_dagger(false));
    out.push_back(associativity_and_dagger(true));
    out.push_back(bopp_product_rule());
    out.push_back(ladder_commutator());
    out.push_back(selection_rules());
    out.push_back(frequency_equation(params));
    out.push_back(zero_field_limit(params));
    out.push_back(wigner_normalization(params));
    out.push_back(gaussian_baseline());
    out.push_back(bohlin_suite(params));
    return out;
}

void write_verification(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& r : results) out << fmt::format("{} {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace sqm
