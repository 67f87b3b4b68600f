#pragma once

#include "sqm/model.hpp"

namespace sqm {

/// Planar point and canonical momenta. x, y in GeV^-1; Px, Py in GeV.
struct CartesianState {
    double x = 0.0;
    double y = 0.0;
    double Px = 0.0;
    double Py = 0.0;
};

struct OscillatorPoint {
    double q1 = 0.0;
    double q2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// x = q1^2 - q2^2, y = 2 q1 q2 only; defined at the origin.
CartesianState bohlin_position(double q1, double q2);

/// Full map including momenta. Throws OriginSingularity at q1 = q2 = 0.
CartesianState bohlin_forward(double q1, double q2, double p1, double p2);

/// Inverse on the branch q1 >= 0 (branch = +1) or its mirror (branch = -1).
/// Throws OriginSingularity at x = y = 0.
OscillatorPoint bohlin_inverse(const CartesianState& s, int branch = 1);

struct HamiltonianConsistency {
    double kinetic_cartesian = 0.0;
    double kinetic_mapped = 0.0;
    double kinetic_residual = 0.0;
    double diamagnetic_cartesian = 0.0;
    double diamagnetic_mapped = 0.0;
    double diamagnetic_residual = 0.0;
    /// -alpha/r + beta r in the plane against the printed mapped form
    /// -alpha/r - beta r^2.
    double cornell_cartesian = 0.0;
    double cornell_printed = 0.0;
    double cornell_residual = 0.0;
    /// Spin coefficients -sigma B_z (planar form, e = hbar = 1) and
    /// -sigma B_z / (2m) (mapped form); their ratio is 2m.
    double spin_cartesian = 0.0;
    double spin_mapped = 0.0;
    double spin_ratio = 0.0;
};

/// Term-by-term comparison of the planar and mapped Hamiltonians at one point.
/// Throws OriginSingularity at q1 = q2 = 0.
HamiltonianConsistency hamiltonian_consistency(const OscillatorPoint& sample, const ModelParams& params);

}  // namespace sqm
