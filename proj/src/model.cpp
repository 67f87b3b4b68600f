#include "sqm/model.hpp"

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

void StateLabel::validate() const {
    if (n1 < 0 || n2 < 0) fail(ErrorCode::InvalidArgument, fmt::format("state ({},{}) has a negative quantum number", n1, n2));
    if (spin != 1 && spin != -1) fail(ErrorCode::InvalidArgument, fmt::format("spin must be +1 or -1, got {}", spin));
}

void ModelParams::validate() const {
    auto require = [](bool ok, const char* what, double v) {
        if (!ok) fail(ErrorCode::InvalidArgument, fmt::format("{} out of range: {}", what, v));
    };
    require(alpha >= 0.0, "alpha", alpha);
    require(beta >= 0.0, "beta", beta);
    require(m_q > 0.0, "m_q", m_q);
    require(m_qbar > 0.0, "m_qbar", m_qbar);
    require(m > 0.0, "reduced mass", m);
    require(B_z >= 0.0, "B_z", B_z);
    require(spin == 1 || spin == -1, "spin", spin);
    if (fixed_omega) require(*fixed_omega > 0.0, "fixed omega", *fixed_omega);
}

}  // namespace sqm
