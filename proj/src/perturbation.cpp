#include "sqm/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "sqm/errors.hpp"
#include "sqm/fock.hpp"
#include "sqm/oscillator.hpp"

namespace sqm {

namespace {

void require_omega(double omega) {
    if (!(omega > 0.0)) fail(ErrorCode::InvalidArgument, fmt::format("omega must be > 0, got {}", omega));
}

double prefactor(const ModelParams& params, double omega) {
    const double p = params.perturbation();
    return params.prefactor_mode == PrefactorMode::Enecor ? p / (8.0 * omega) : p / (8.0 * omega * omega * omega);
}

std::string describe(const StateLabel& label, const ModelParams& p) {
    return fmt::format("state ({},{}), alpha={}, beta={}, m={}, B_z={}, mode={}", label.n1, label.n2, p.alpha, p.beta,
                       p.m, p.B_z, p.prefactor_mode == PrefactorMode::Enecor ? "enecor" : "b21");
}

}  // namespace

double PerturbedState::norm_squared() const {
    double s = 1.0;
    for (const auto& [m, c] : coefficients) s += c * c;
    return s;
}

PhaseFunction PerturbedState::to_phase_function(bool normalized) const {
    PhaseFunction out = base;
    for (const auto& [m, c] : coefficients) out.add(diagonal_index(m.first, m.second), c);
    if (normalized) out *= 1.0 / std::sqrt(norm_squared());
    return out;
}

PerturbedState first_order_coefficients(const StateLabel& label, const ModelParams& params, double omega) {
    require_omega(omega);
    label.validate();
    PerturbedState state;
    state.label = label;
    state.omega = omega;
    state.gamma = -params.perturbation() / omega;
    state.base = zero_order_state(label, omega);

    const double pref = prefactor(params, omega);
    for (int m1 = std::max(0, label.n1 - 6); m1 <= label.n1 + 6; ++m1)
        for (int m2 = std::max(0, label.n2 - 6); m2 <= label.n2 + 6; ++m2) {
            if (m1 == label.n1 && m2 == label.n2) continue;
            const double element = h1_element({m1, m2, label.n1, label.n2}, omega, 1.0);
            if (element == 0.0) continue;
            const int gap = label.shell() - (m1 + m2);
            if (gap == 0)
                fail(ErrorCode::DegenerateCoupling,
                     fmt::format("state ({},{}) couples to degenerate state ({},{})", label.n1, label.n2, m1, m2));
            const double c = pref * element / (omega * gap);
            if (c != 0.0) state.coefficients[{m1, m2}] = c;
        }
    return state;
}

double ReferenceFixture::per_unit_gamma(const ShellLabel& m) const {
    for (const auto& [label, value] : printed)
        if (label == m) return bracket_sign * value;
    return 0.0;
}

ReferenceFixture reference_state_fixture(Fixture which) {
    const double r2 = std::sqrt(2.0);
    switch (which) {
        case Fixture::Ground:
            return {which,
                    {0, 0, 1},
                    1,
                    {{{2, 0}, 21.0 * r2 + 18.0 + 25.0 * std::sqrt(10.0)},
                     {{2, 2}, 3.0 * r2 / 2.0 + 3.0},
                     {{4, 0}, 30.0 * std::sqrt(21.0) + 3.0 * std::sqrt(6.0)},
                     {{4, 2}, -4.0 * std::sqrt(3.0)},
                     {{6, 0}, 8.0 * std::sqrt(1155.0)}}};
        case Fixture::Excited10:
            return {which,
                    {1, 0, 1},
                    1,
                    {{{1, 2}, 89.30},
                     {{1, 4}, 13.47},
                     {{1, 6}, 6.32},
                     {{3, 0}, -89.43},
                     {{3, 2}, -19.33},
                     {{5, 0}, -23.51},
                     {{5, 4}, -10.31},
                     {{7, 0}, -11.83}}};
        case Fixture::Excited01:
            return {which,
                    {0, 1, 1},
                    -1,
                    {{{2, 1}, -89.30},
                     {{4, 1}, -13.47},
                     {{6, 1}, -6.32},
                     {{0, 3}, 89.43},
                     {{2, 3}, 19.33},
                     {{0, 5}, 23.51},
                     {{4, 5}, 10.31},
                     {{0, 7}, 11.83}}};
    }
    fail(ErrorCode::InvalidArgument, "unknown fixture");
}

double omega1(const StateLabel& label, const ModelParams& params) {
    label.validate();
    const double n = label.shell() + 1;
    const double d = delta1(label.n1, label.n2);
    const double p = params.perturbation();
    const double a = params.alpha;
    if (params.prefactor_mode == PrefactorMode::Enecor) {
        // n w^2 - alpha w + p d / 8 = 0
        const double disc = a * a - 4.0 * n * (d / 8.0) * p;
        if (disc < 0.0)
            fail(ErrorCode::NegativeDiscriminant,
                 fmt::format("discriminant {} < 0 for {}", disc, describe(label, params)));
        const double w = (a + std::sqrt(disc)) / (2.0 * n);
        if (!(w > 0.0))
            fail(ErrorCode::NegativeDiscriminant, fmt::format("no positive frequency for {}", describe(label, params)));
        return w;
    }
    // n w^4 - alpha w^3 + p d / 8 = 0, largest positive root.
    if (p == 0.0) {
        if (!(a > 0.0))
            fail(ErrorCode::NegativeDiscriminant, fmt::format("no positive frequency for {}", describe(label, params)));
        return a / n;
    }
    auto f = [&](double w) { return n * w * w * w * w - a * w * w * w + p * d / 8.0; };
    double lo = 3.0 * a / (4.0 * n);
    if (f(lo) > 0.0)
        fail(ErrorCode::NegativeDiscriminant, fmt::format("quartic has no positive root for {}", describe(label, params)));
    double hi = std::max(1.0, 2.0 * lo);
    while (f(hi) <= 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double resolve_omega(const StateLabel& label, const ModelParams& params) {
    if (params.fixed_omega) {
        require_omega(*params.fixed_omega);
        return *params.fixed_omega;
    }
    return omega1(label, params);
}

double kappa1(const StateLabel& label, const ModelParams& params, double omega) {
    require_omega(omega);
    return (label.shell() + 1) * omega + prefactor(params, omega) * delta1(label.n1, label.n2);
}

EnergyValue energy1(const StateLabel& label, const ModelParams& params, double omega) {
    require_omega(omega);
    const double n = label.shell() + 1;
    const double bracket = params.alpha - prefactor(params, omega) * delta1(label.n1, label.n2);
    EnergyValue e;
    e.signed_value = -bracket * bracket / (2.0 * n * n);
    e.modulus = std::abs(e.signed_value);
    return e;
}

std::string to_string(Fixture which) {
    switch (which) {
        case Fixture::Ground: return "ground";
        case Fixture::Excited10: return "excited_10";
        case Fixture::Excited01: return "excited_01";
    }
    return "unknown";
}

FixtureComparison compare_fixture(Fixture which, const ModelParams& params, double omega) {
    const auto fixture = reference_state_fixture(which);
    FixtureComparison out;
    out.which = which;
    out.omega = omega;
    std::map<ShellLabel, double> generated;
    try {
        const auto state = first_order_coefficients(fixture.label, params, omega);
        if (state.gamma != 0.0)
            for (const auto& [m, c] : state.coefficients) generated[m] = c / state.gamma;
    } catch (const Error& e) {
        out.error = e.what();
    }
    std::set<ShellLabel> labels;
    for (const auto& [m, v] : fixture.printed) labels.insert(m);
    for (const auto& [m, v] : generated) labels.insert(m);
    for (const auto& m : labels) {
        FixtureComparisonRow row;
        row.m = m;
        row.printed_per_gamma = fixture.per_unit_gamma(m);
        const auto it = generated.find(m);
        row.generated_per_gamma = it == generated.end() ? 0.0 : it->second;
        row.abs_diff = std::abs(row.printed_per_gamma - row.generated_per_gamma);
        out.rows.push_back(row);
    }
    return out;
}

void write_fixture_csv(std::ostream& out, const std::vector<FixtureComparison>& comparisons) {
    out << "fixture,m1,m2,printed_per_gamma,generated_per_gamma,abs_diff\n";
    for (const auto& c : comparisons)
        for (const auto& r : c.rows)
            out << fmt::format("{},{},{},{:.12g},{:.12g},{:.12g}\n", to_string(c.which), r.m.first, r.m.second,
                               r.printed_per_gamma, r.generated_per_gamma, r.abs_diff);
}

}  // namespace sqm
