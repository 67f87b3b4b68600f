#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqm/phase_function.hpp"

namespace sqm {

struct WignerResult {
    PhaseFunction function;
    bool rescaled = false;
    /// integrate(dagger(psi) * psi) of the input.
    double input_norm = 1.0;
};

/// psi * dagger(psi) in the closed basis, rescaled to unit integral when the
/// input is not normalized.
WignerResult wigner_of(const PhaseFunction& state);

/// q1 runs over lo, lo + step, ... <= hi; one row per p1 value. q2, p2 fixed.
struct SliceSpec {
    double q2 = 0.0;
    double p2 = 0.0;
    double q1_lo = 0.0;
    double q1_hi = 4.0;
    double q1_step = 0.05;
    std::vector<double> p1_values{0.0};

    /// lo, lo + step, ... <= hi.
    static std::vector<double> range(double lo, double hi, double step);
};

struct GridSlice {
    SliceSpec spec;
    double omega = 1.0;
    std::string label;
    std::vector<PhasePoint> nodes;
    std::vector<double> values;

    double max_value() const;
    double min_value() const;
};

/// Samples f at every slice node. An empty q1 range or p1 list gives an empty
/// slice. Throws ImaginaryResidue when |Im f| > 1e-8 at a node.
GridSlice evaluate_slice(const PhaseFunction& f, const SliceSpec& spec, const std::string& label = {});

/// Header q1,p1,q2,p2,f_w; 15 significant digits.
void write_slice_csv(std::ostream& out, const GridSlice& slice);

/// Box |q_i| <= q_half_width, |p_i| <= p_half_width. Zero widths select
/// 6/sqrt(omega) and 6 sqrt(omega).
struct NegativityOptions {
    double q_half_width = 0.0;
    double p_half_width = 0.0;
    /// Nodes per axis of the minimum search grid.
    int grid_points = 241;
    /// Relative tolerance of the adaptive radial quadrature.
    double tolerance = 1e-9;
    /// Gauss-Legendre panels per axis of the four-dimensional fallback.
    int panels = 6;
};

struct NegativityReport {
    double min_value = 0.0;
    double negative_volume = 0.0;
    PhasePoint grid_min_location;
    /// Fraction of the total integral of |f| captured by the box.
    double captured_fraction = 1.0;
    bool radial = true;
};

/// eta = integral of (|f| - f)/2 over four-dimensional phase space. Doubly
/// diagonal f is radial in each mode and integrated adaptively in (R1, R2)
/// over the disks inscribed in the box; other f use a tensor Gauss-Legendre
/// rule on the box. Throws BoxTooSmall when the box captures less than
/// 1 - 1e-6 of the integral of |f|.
NegativityReport negativity(const PhaseFunction& f, const NegativityOptions& options = {});

/// Tensor Gauss-Legendre quadrature of f over the box (default widths as above).
complex grid_integral(const PhaseFunction& f, const NegativityOptions& options = {});

}  // namespace sqm
