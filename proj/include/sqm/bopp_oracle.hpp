#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace sqm {

/// Samples of a single-mode phase-space function on a uniform square-cell
/// grid: node (i, j) sits at (q0 + i*step, p0 + j*step).
struct SampledGrid {
    double q0 = 0.0;
    double p0 = 0.0;
    double step = 0.05;
    int nq = 0;
    int np = 0;
    std::vector<std::complex<double>> values;  // row-major, index i*np + j

    double q(int i) const { return q0 + i * step; }
    double p(int j) const { return p0 + j * step; }
    std::complex<double>& at(int i, int j) { return values[static_cast<std::size_t>(i) * np + j]; }
    const std::complex<double>& at(int i, int j) const { return values[static_cast<std::size_t>(i) * np + j]; }
};

/// Samples fn on the square [-half_width, half_width]^2 with the given step.
SampledGrid sample_grid(const std::function<std::complex<double>(double, double)>& fn, double half_width,
                        double step);

struct BoppOptions {
    /// Highest order in hbar/2 of the bidifferential series. nullopt applies the
    /// Bopp shift to all orders in momentum space,
    ///   f * exp(i k.x) = f(q - k_p/2, p + k_q/2) exp(i k.x),
    /// which is exact for any decaying f, g sampled inside the grid.
    std::optional<int> truncation = 8;
    /// Accuracy order of the centered finite-difference stencils (even, >= 2).
    int accuracy_order = 8;
    /// Output keeps every stride-th interior node.
    int output_stride = 1;
    /// All-orders mode: only nodes with |q|, |p| <= interior_half_width are produced.
    double interior_half_width = 3.0;
    /// All-orders mode: momentum cutoff of the Fourier representation of g.
    double k_max = 16.0;
};

/// Largest stencil reach (in grid units times step) tolerated by the series mode.
inline constexpr double kMaxStencilSpan = 0.5;

/// Cross-validation oracle for the star product on sampled data. Series mode
/// throws GridTooCoarse when the stencil for the requested order spans more
/// than kMaxStencilSpan or the grid has too few nodes.
SampledGrid bopp_star_oracle(const SampledGrid& f, const SampledGrid& g, const BoppOptions& options = {});

/// Centered finite-difference weights for the d-th derivative on integer
/// offsets -w..w (Fornberg's recursion).
std::vector<double> central_difference_weights(int derivative, int half_width);

/// Stencil half-width needed for a d-th derivative at the given accuracy order.
int stencil_half_width(int derivative, int accuracy_order);

}  // namespace sqm
