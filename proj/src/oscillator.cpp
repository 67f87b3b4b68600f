#include "sqm/oscillator.hpp"

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

namespace {

void require_omega(double omega) {
    if (!(omega > 0.0)) fail(ErrorCode::InvalidArgument, fmt::format("omega must be > 0, got {}", omega));
}

}  // namespace

BasisIndex diagonal_index(int n1, int n2) { return {n1, n1, n2, n2}; }

PhaseFunction zero_order_state(const StateLabel& label, double omega) {
    require_omega(omega);
    label.validate();
    return PhaseFunction::basis(omega, diagonal_index(label.n1, label.n2));
}

double kappa0(const StateLabel& label, double omega) {
    require_omega(omega);
    return (label.shell() + 1) * omega;
}

double energy0(const StateLabel& label, const ModelParams& params) {
    if (!(params.m > 0.0)) fail(ErrorCode::InvalidArgument, "energy0: reduced mass must be > 0");
    const double n = label.shell() + 1;
    return -0.5 * params.m * params.alpha * params.alpha / (n * n) - params.B_z / 2.0;
}

PhaseFunction apply_h0(const PhaseFunction& f) {
    PhaseFunction out = f;
    out += ladder_left(Ladder::Raise, 1, ladder_left(Ladder::Lower, 1, f));
    out += ladder_left(Ladder::Raise, 2, ladder_left(Ladder::Lower, 2, f));
    out *= f.omega();
    return out;
}

}  // namespace sqm
