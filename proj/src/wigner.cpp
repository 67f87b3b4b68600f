#include "sqm/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

namespace {

constexpr double kImaginaryTolerance = 1e-8;
constexpr double kMassDeficit = 1e-6;
constexpr int kGaussOrder = 10;

struct Box {
    double qh;
    double ph;
};

Box resolve_box(const PhaseFunction& f, const NegativityOptions& o) {
    const double sw = std::sqrt(f.omega());
    Box b{o.q_half_width > 0.0 ? o.q_half_width : 6.0 / sw, o.p_half_width > 0.0 ? o.p_half_width : 6.0 * sw};
    if (o.q_half_width < 0.0 || o.p_half_width < 0.0) fail(ErrorCode::InvalidArgument, "box half-widths must be >= 0");
    return b;
}

// Composite Gauss-Legendre nodes and weights on [-h, h].
void composite_rule(double h, int panels, std::vector<double>& x, std::vector<double>& w) {
    using rule = boost::math::quadrature::gauss<double, kGaussOrder>;
    const auto& abs = rule::abscissa();
    const auto& wts = rule::weights();
    x.clear();
    w.clear();
    const double width = 2.0 * h / panels;
    for (int k = 0; k < panels; ++k) {
        const double mid = -h + (k + 0.5) * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < abs.size(); ++i) {
            const bool zero = abs[i] == 0.0;
            x.push_back(mid + half * abs[i]);
            w.push_back(half * wts[i]);
            if (!zero) {
                x.push_back(mid - half * abs[i]);
                w.push_back(half * wts[i]);
            }
        }
    }
}

struct ModeTable {
    std::vector<complex> values;  // node index i*np + j
};

// Per-term mode factors on the tensor nodes of one mode.
struct TensorGrid {
    std::vector<double> q, wq, p, wp;
    std::vector<complex> coeff;
    std::vector<ModeTable> mode1, mode2;

    TensorGrid(const PhaseFunction& f, const Box& box, int panels) {
        composite_rule(box.qh, panels, q, wq);
        composite_rule(box.ph, panels, p, wp);
        const double omega = f.omega();
        for (const auto& [idx, c] : f.terms()) {
            coeff.push_back(c);
            ModeTable a, b;
            a.values.reserve(q.size() * p.size());
            b.values.reserve(q.size() * p.size());
            for (double qi : q)
                for (double pj : p) {
                    a.values.push_back(mode_element(idx.m1, idx.n1, omega, qi, pj));
                    b.values.push_back(mode_element(idx.m2, idx.n2, omega, qi, pj));
                }
            mode1.push_back(std::move(a));
            mode2.push_back(std::move(b));
        }
    }

    std::size_t nodes() const { return q.size() * p.size(); }
    double weight(std::size_t k) const { return wq[k / p.size()] * wp[k % p.size()]; }
};

// Diagonal elements Phi_nn, n = 0..n_max, at R^2 = omega q^2 + p^2/omega.
void radial_elements(int n_max, double r, std::vector<double>& out) {
    out.resize(n_max + 1);
    const double x = 2.0 * r * r;
    const double scale = 2.0 / std::sqrt(2.0 * std::numbers::pi) * std::exp(-r * r);
    double prev = 1.0;
    double cur = 1.0 - x;
    out[0] = scale;
    if (n_max >= 1) out[1] = -scale * cur;
    for (int n = 1; n < n_max; ++n) {
        const double next = ((2 * n + 1 - x) * cur - n * prev) / (n + 1);
        prev = cur;
        cur = next;
        out[n + 1] = (n % 2 == 0 ? -scale : scale) * cur;
    }
}

struct RadialFunction {
    std::vector<double> coeff;
    std::vector<int> n1, n2;
    int n_max = 0;

    explicit RadialFunction(const PhaseFunction& f) {
        for (const auto& [idx, c] : f.terms()) {
            coeff.push_back(c.real());
            n1.push_back(idx.m1);
            n2.push_back(idx.m2);
            n_max = std::max({n_max, idx.m1, idx.m2});
        }
    }

    double combine(const std::vector<double>& e1, const std::vector<double>& e2) const {
        double s = 0.0;
        for (std::size_t t = 0; t < coeff.size(); ++t) s += coeff[t] * e1[n1[t]] * e2[n2[t]];
        return s;
    }

    double operator()(double r1, double r2) const {
        std::vector<double> e1, e2;
        radial_elements(n_max, r1, e1);
        radial_elements(n_max, r2, e2);
        return combine(e1, e2);
    }
};

// Integral over [0, r_max]^2 of r1 r2 h(g(r1, r2)).
template <class H>
double integrate_square(const RadialFunction& g, const H& h, double r_max, double tol) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    auto outer = [&](double r1) {
        std::vector<double> e1, e2;
        radial_elements(g.n_max, r1, e1);
        auto inner = [&](double r2) {
            radial_elements(g.n_max, r2, e2);
            return r2 * h(g.combine(e1, e2));
        };
        return r1 * gk::integrate(inner, 0.0, r_max, 15, tol);
    };
    return gk::integrate(outer, 0.0, r_max, 15, tol);
}

}  // namespace

WignerResult wigner_of(const PhaseFunction& state) {
    WignerResult out{star(state, dagger(state)), false, 1.0};
    out.input_norm = integrate(star(dagger(state), state)).real();
    if (!(out.input_norm > 0.0)) fail(ErrorCode::InvalidArgument, "wigner_of: state has zero norm");
    if (std::abs(out.input_norm - 1.0) > 1e-12) {
        out.rescaled = true;
        out.function *= 1.0 / out.input_norm;
    }
    return out;
}

std::vector<double> SliceSpec::range(double lo, double hi, double step) {
    if (!(step > 0.0)) fail(ErrorCode::InvalidArgument, fmt::format("slice step must be > 0, got {}", step));
    std::vector<double> out;
    for (long i = 0;; ++i) {
        const double x = lo + static_cast<double>(i) * step;
        if (x > hi + 1e-9 * step) break;
        out.push_back(x);
    }
    return out;
}

double GridSlice::max_value() const {
    return values.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::max_element(values.begin(), values.end());
}

double GridSlice::min_value() const {
    return values.empty() ? std::numeric_limits<double>::quiet_NaN() : *std::min_element(values.begin(), values.end());
}

GridSlice evaluate_slice(const PhaseFunction& f, const SliceSpec& spec, const std::string& label) {
    GridSlice out;
    out.spec = spec;
    out.omega = f.omega();
    out.label = label;
    const auto q1 = SliceSpec::range(spec.q1_lo, spec.q1_hi, spec.q1_step);
    for (double p1 : spec.p1_values)
        for (double q : q1) {
            const PhasePoint pt{q, p1, spec.q2, spec.p2};
            const complex v = f(pt);
            if (std::abs(v.imag()) > kImaginaryTolerance)
                fail(ErrorCode::ImaginaryResidue,
                     fmt::format("imaginary part {} at (q1={}, p1={}, q2={}, p2={})", v.imag(), q, p1, spec.q2, spec.p2));
            out.nodes.push_back(pt);
            out.values.push_back(v.real());
        }
    return out;
}

void write_slice_csv(std::ostream& out, const GridSlice& slice) {
    out << "q1,p1,q2,p2,f_w\n";
    for (std::size_t k = 0; k < slice.nodes.size(); ++k) {
        const auto& n = slice.nodes[k];
        out << fmt::format("{:.15g},{:.15g},{:.15g},{:.15g},{:.15g}\n", n.q1, n.p1, n.q2, n.p2, slice.values[k]);
    }
}

NegativityReport negativity(const PhaseFunction& f, const NegativityOptions& options) {
    if (options.grid_points < 2) fail(ErrorCode::InvalidArgument, "negativity: grid_points must be >= 2");
    if (options.panels < 1) fail(ErrorCode::InvalidArgument, "negativity: panels must be >= 1");
    const Box box = resolve_box(f, options);
    const double sw = std::sqrt(f.omega());
    NegativityReport report;
    report.min_value = std::numeric_limits<double>::infinity();

    if (f.is_diagonal()) {
        report.radial = true;
        const RadialFunction g(f);
        const double r_max = std::min(box.qh * sw, box.ph / sw);
        const double measure = 4.0 * std::numbers::pi * std::numbers::pi;

        const int n = options.grid_points;
        std::vector<std::vector<double>> table(n);
        for (int i = 0; i < n; ++i) radial_elements(g.n_max, r_max * i / (n - 1), table[i]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double r1 = r_max * i / (n - 1);
                const double r2 = r_max * j / (n - 1);
                const double v = g.combine(table[i], table[j]);
                if (v < report.min_value) {
                    report.min_value = v;
                    report.grid_min_location = {r1 / sw, 0.0, r2 / sw, 0.0};
                }
            }

        auto absolute = [](double v) { return std::abs(v); };
        auto negative = [](double v) { return std::max(-v, 0.0); };
        const double in_box = measure * integrate_square(g, absolute, r_max, options.tolerance);
        const double total = measure * integrate_square(g, absolute, std::max(2.0 * r_max, 16.0), options.tolerance);
        report.captured_fraction = total > 0.0 ? in_box / total : 1.0;
        if (report.captured_fraction < 1.0 - kMassDeficit)
            fail(ErrorCode::BoxTooSmall,
                 fmt::format("box captures only {:.9f} of the absolute integral", report.captured_fraction));
        report.negative_volume = measure * integrate_square(g, negative, r_max, options.tolerance);
        return report;
    }

    report.radial = false;
    const TensorGrid grid(f, box, options.panels);
    const std::size_t nodes = grid.nodes();
    double abs_sum = 0.0;
    double neg_sum = 0.0;
    for (std::size_t a = 0; a < nodes; ++a)
        for (std::size_t b = 0; b < nodes; ++b) {
            complex v = 0.0;
            for (std::size_t t = 0; t < grid.coeff.size(); ++t)
                v += grid.coeff[t] * grid.mode1[t].values[a] * grid.mode2[t].values[b];
            const double w = grid.weight(a) * grid.weight(b);
            abs_sum += w * std::abs(v.real());
            neg_sum += w * std::max(-v.real(), 0.0);
            if (v.real() < report.min_value) {
                report.min_value = v.real();
                const std::size_t np = grid.p.size();
                report.grid_min_location = {grid.q[a / np], grid.p[a % np], grid.q[b / np], grid.p[b % np]};
            }
        }
    // Upper bound on the absolute mass outside the box, term by term:
    // |c| (int|A| int|B| over the plane - the same over the box).
    const TensorGrid wide(f, {2.0 * box.qh, 2.0 * box.ph}, 2 * options.panels);
    double outside = 0.0;
    for (std::size_t t = 0; t < grid.coeff.size(); ++t) {
        double a_box = 0.0, b_box = 0.0, a_all = 0.0, b_all = 0.0;
        for (std::size_t k = 0; k < grid.nodes(); ++k) {
            a_box += grid.weight(k) * std::abs(grid.mode1[t].values[k]);
            b_box += grid.weight(k) * std::abs(grid.mode2[t].values[k]);
        }
        for (std::size_t k = 0; k < wide.nodes(); ++k) {
            a_all += wide.weight(k) * std::abs(wide.mode1[t].values[k]);
            b_all += wide.weight(k) * std::abs(wide.mode2[t].values[k]);
        }
        outside += std::abs(grid.coeff[t]) * std::max(a_all * b_all - a_box * b_box, 0.0);
    }
    const double total = abs_sum + outside;
    report.captured_fraction = total > 0.0 ? abs_sum / total : 1.0;
    if (report.captured_fraction < 1.0 - kMassDeficit)
        fail(ErrorCode::BoxTooSmall,
             fmt::format("box captures only {:.9f} of the absolute integral", report.captured_fraction));
    report.negative_volume = neg_sum;
    return report;
}

complex grid_integral(const PhaseFunction& f, const NegativityOptions& options) {
    if (options.panels < 1) fail(ErrorCode::InvalidArgument, "grid_integral: panels must be >= 1");
    const TensorGrid grid(f, resolve_box(f, options), options.panels);
    complex sum = 0.0;
    for (std::size_t t = 0; t < grid.coeff.size(); ++t) {
        complex s1 = 0.0;
        complex s2 = 0.0;
        for (std::size_t k = 0; k < grid.nodes(); ++k) {
            s1 += grid.weight(k) * grid.mode1[t].values[k];
            s2 += grid.weight(k) * grid.mode2[t].values[k];
        }
        sum += grid.coeff[t] * s1 * s2;
    }
    return sum;
}

}  // namespace sqm
