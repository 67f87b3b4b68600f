#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqm/model.hpp"
#include "sqm/phase_function.hpp"

namespace sqm {

/// (m1, m2) labels of the zero-order states mixed into a corrected state.
using ShellLabel = std::pair<int, int>;

struct PerturbedState {
    StateLabel label;
    double omega = 1.0;
    /// beta/omega - B_z^2/(8 m omega).
    double gamma = 0.0;
    std::map<ShellLabel, double> coefficients;
    PhaseFunction base{1.0};

    /// psi0 + sum c_m psi_m, rescaled to unit norm when `normalized`.
    PhaseFunction to_phase_function(bool normalized = true) const;
    /// 1 + sum c_m^2.
    double norm_squared() const;
};

/// Standard first-order correction excluding only the base pair.
/// Throws DegenerateCoupling when a same-shell state couples to the base.
PerturbedState first_order_coefficients(const StateLabel& label, const ModelParams& params, double omega);

enum class Fixture { Ground, Excited10, Excited01 };

/// Printed reference coefficients. `bracket_sign` is +1 when the printed list
/// multiplies gamma and -1 when it multiplies -gamma.
struct ReferenceFixture {
    Fixture which;
    StateLabel label;
    int bracket_sign = 1;
    std::vector<std::pair<ShellLabel, double>> printed;

    double per_unit_gamma(const ShellLabel& m) const;
};

ReferenceFixture reference_state_fixture(Fixture which);

/// Frequency solving kappa1 = alpha. Throws NegativeDiscriminant when no root exists.
double omega1(const StateLabel& label, const ModelParams& params);

/// omega_mode resolution: the fixed value if set, otherwise omega1.
double resolve_omega(const StateLabel& label, const ModelParams& params);

double kappa1(const StateLabel& label, const ModelParams& params, double omega);

struct EnergyValue {
    double signed_value = 0.0;
    double modulus = 0.0;
};

EnergyValue energy1(const StateLabel& label, const ModelParams& params, double omega);

struct FixtureComparisonRow {
    ShellLabel m;
    double printed_per_gamma = 0.0;
    double generated_per_gamma = 0.0;
    double abs_diff = 0.0;
};

struct FixtureComparison {
    Fixture which;
    double omega = 0.0;
    std::string error;  // set when generation failed, e.g. degenerate coupling
    std::vector<FixtureComparisonRow> rows;
};

/// Printed vs generated coefficients per unit gamma at the given omega.
/// Never throws on disagreement.
FixtureComparison compare_fixture(Fixture which, const ModelParams& params, double omega);

/// Header fixture,m1,m2,printed_per_gamma,generated_per_gamma,abs_diff.
void write_fixture_csv(std::ostream& out, const std::vector<FixtureComparison>& comparisons);

std::string to_string(Fixture which);

}  // namespace sqm
