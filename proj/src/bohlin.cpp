#include "sqm/bohlin.hpp"

#include <cmath>

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

CartesianState bohlin_position(double q1, double q2) { return {q1 * q1 - q2 * q2, 2.0 * q1 * q2, 0.0, 0.0}; }

CartesianState bohlin_forward(double q1, double q2, double p1, double p2) {
    const double r = q1 * q1 + q2 * q2;
    if (r == 0.0) fail(ErrorCode::OriginSingularity, "momentum map is singular at q1 = q2 = 0");
    CartesianState s = bohlin_position(q1, q2);
    s.Px = (p1 * q1 + p2 * q2) / (2.0 * r);
    s.Py = (p2 * q1 - p1 * q2) / (2.0 * r);
    return s;
}

OscillatorPoint bohlin_inverse(const CartesianState& s, int branch) {
    if (branch != 1 && branch != -1) fail(ErrorCode::InvalidArgument, fmt::format("branch must be +1 or -1, got {}", branch));
    const double r = std::hypot(s.x, s.y);
    if (r == 0.0) fail(ErrorCode::OriginSingularity, "inverse map is singular at x = y = 0");
    OscillatorPoint o;
    o.q1 = std::sqrt((r + s.x) / 2.0);
    o.q2 = std::copysign(std::sqrt((r - s.x) / 2.0), s.y);
    // On the negative x axis q1 vanishes and the sign of y alone fixes q2.
    if (s.y == 0.0 && s.x < 0.0) o.q2 = std::sqrt(-s.x);
    o.q1 *= branch;
    o.q2 *= branch;
    o.p1 = 2.0 * (o.q1 * s.Px - o.q2 * s.Py);
    o.p2 = 2.0 * (o.q2 * s.Px + o.q1 * s.Py);
    return o;
}

HamiltonianConsistency hamiltonian_consistency(const OscillatorPoint& pt, const ModelParams& params) {
    const CartesianState c = bohlin_forward(pt.q1, pt.q2, pt.p1, pt.p2);
    const double m = params.m;
    const double b2 = params.B_z * params.B_z;
    const double r = pt.q1 * pt.q1 + pt.q2 * pt.q2;
    const double rho = std::hypot(c.x, c.y);

    HamiltonianConsistency h;
    h.kinetic_cartesian = (c.Px * c.Px + c.Py * c.Py) / (2.0 * m);
    h.kinetic_mapped = (pt.p1 * pt.p1 + pt.p2 * pt.p2) / (8.0 * m * r);
    h.kinetic_residual = h.kinetic_cartesian - h.kinetic_mapped;
    h.diamagnetic_cartesian = b2 * (c.x * c.x + c.y * c.y) / (8.0 * m);
    h.diamagnetic_mapped = b2 * r * r / (8.0 * m);
    h.diamagnetic_residual = h.diamagnetic_cartesian - h.diamagnetic_mapped;
    h.cornell_cartesian = -params.alpha / rho + params.beta * rho;
    h.cornell_printed = -params.alpha / r - params.beta * r * r;
    h.cornell_residual = h.cornell_cartesian - h.cornell_printed;
    h.spin_cartesian = -params.spin * params.B_z;
    h.spin_mapped = -params.spin * params.B_z / (2.0 * m);
    h.spin_ratio = h.spin_mapped != 0.0 ? h.spin_cartesian / h.spin_mapped : 2.0 * m;
    return h;
}

}  // namespace sqm
