#pragma once

#include "sqm/model.hpp"
#include "sqm/phase_function.hpp"

namespace sqm {

/// Phi_{n1 n1} (x) Phi_{n2 n2}; unit normalized under integrate(dagger(psi) * psi).
PhaseFunction zero_order_state(const StateLabel& label, double omega);

/// Basis index of the zero-order state with quantum numbers (n1, n2).
BasisIndex diagonal_index(int n1, int n2);

double kappa0(const StateLabel& label, double omega);

/// -m alpha^2 / (2 (n1+n2+1)^2) - B_z / 2.
double energy0(const StateLabel& label, const ModelParams& params);

/// omega (a^dag * a + b^dag * b + 1) * f.
PhaseFunction apply_h0(const PhaseFunction& f);

}  // namespace sqm
