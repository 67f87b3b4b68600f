#pragma once

#include <optional>

namespace sqm {

/// Energy-correction prefactor convention: 1/(8 omega) or 1/(8 omega^3).
enum class PrefactorMode { Enecor, B21 };

/// Quantum numbers of a two-mode oscillator state and its sigma_z branch.
struct StateLabel {
    int n1 = 0;
    int n2 = 0;
    int spin = 1;

    int shell() const noexcept { return n1 + n2; }
    void validate() const;
};

/// Physical parameters. Units: GeV for masses, GeV^2 for beta and B_z.
struct ModelParams {
    double alpha = 0.472;
    double beta = 0.191;
    double m_q = 1.3205;
    double m_qbar = 1.3205;
    double m = 0.6602;
    double B_z = 0.15;
    int spin = 1;
    PrefactorMode prefactor_mode = PrefactorMode::Enecor;
    std::optional<double> fixed_omega;

    static ModelParams table1() { return {}; }

    /// B_z^2 / (8 m) - beta, the coefficient of the sextic perturbation.
    double perturbation() const noexcept { return B_z * B_z / (8.0 * m) - beta; }

    /// Throws InvalidArgument on alpha < 0, beta < 0, non-positive masses,
    /// B_z < 0, spin outside {+1, -1} or a non-positive fixed omega.
    void validate() const;
};

}  // namespace sqm
