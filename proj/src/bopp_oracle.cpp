#include "sqm/bopp_oracle.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

namespace {

using cplx = std::complex<double>;

void require_same_geometry(const SampledGrid& f, const SampledGrid& g) {
    if (f.nq != g.nq || f.np != g.np || f.step != g.step || f.q0 != g.q0 || f.p0 != g.p0)
        fail(ErrorCode::InvalidArgument, "bopp_star_oracle: inputs must share one grid");
    if (f.values.size() != static_cast<std::size_t>(f.nq) * f.np || g.values.size() != f.values.size())
        fail(ErrorCode::InvalidArgument, "bopp_star_oracle: value buffer does not match grid size");
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Derivative grids d^a/dq^a d^b/dp^b on nodes [margin, n - margin) of each axis.
class DerivativeTable {
public:
    DerivativeTable(const SampledGrid& f, int max_order, int accuracy, int margin)
        : f_(f), max_order_(max_order), margin_(margin) {
        weights_.resize(max_order + 1);
        for (int d = 0; d <= max_order; ++d) {
            const int w = stencil_half_width(d, accuracy);
            weights_[d] = central_difference_weights(d, w);
            for (double& x : weights_[d]) x /= std::pow(f.step, d);
        }
        // q-derivatives on all p columns, then p-derivatives of each.
        const int nq_out = f.nq - 2 * margin;
        const int np_out = f.np - 2 * margin;
        nq_out_ = nq_out;
        np_out_ = np_out;
        tables_.resize(static_cast<std::size_t>(max_order + 1) * (max_order + 1));
        for (int a = 0; a <= max_order; ++a) {
            std::vector<cplx> dq(static_cast<std::size_t>(nq_out) * f.np);
            const auto& wa = weights_[a];
            const int ha = static_cast<int>(wa.size() / 2);
            for (int i = 0; i < nq_out; ++i) {
                const int ic = i + margin;
                for (int j = 0; j < f.np; ++j) {
                    cplx sum{};
                    for (int s = -ha; s <= ha; ++s) sum += wa[s + ha] * f.at(ic + s, j);
                    dq[static_cast<std::size_t>(i) * f.np + j] = sum;
                }
            }
            for (int b = 0; a + b <= max_order; ++b) {
                const auto& wb = weights_[b];
                const int hb = static_cast<int>(wb.size() / 2);
                auto& out = tables_[index(a, b)];
                out.resize(static_cast<std::size_t>(nq_out) * np_out);
                for (int i = 0; i < nq_out; ++i) {
                    for (int j = 0; j < np_out; ++j) {
                        const int jc = j + margin;
                        cplx sum{};
                        for (int t = -hb; t <= hb; ++t) sum += wb[t + hb] * dq[static_cast<std::size_t>(i) * f.np + jc + t];
                        out[static_cast<std::size_t>(i) * np_out + j] = sum;
                    }
                }
            }
        }
    }

    const cplx& d(int a, int b, int i, int j) const {
        return tables_[index(a, b)][static_cast<std::size_t>(i) * np_out_ + j];
    }

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * (max_order_ + 1) + b; }

    const SampledGrid& f_;
    int max_order_;
    int margin_;
    int nq_out_ = 0;
    int np_out_ = 0;
    std::vector<std::vector<double>> weights_;
    std::vector<std::vector<cplx>> tables_;
};

SampledGrid series_star(const SampledGrid& f, const SampledGrid& g, int order, const BoppOptions& opt) {
    if (order < 0) fail(ErrorCode::InvalidArgument, "bopp_star_oracle: truncation must be >= 0");
    if (opt.accuracy_order < 2 || opt.accuracy_order % 2 != 0)
        fail(ErrorCode::InvalidArgument, "bopp_star_oracle: accuracy order must be even and >= 2");
    if (opt.output_stride < 1) fail(ErrorCode::InvalidArgument, "bopp_star_oracle: output stride must be >= 1");

    int margin = 0;
    for (int d = 0; d <= order; ++d) margin = std::max(margin, stencil_half_width(d, opt.accuracy_order));
    if (margin * f.step > kMaxStencilSpan)
        fail(ErrorCode::GridTooCoarse,
             fmt::format("grid step {} too coarse for truncation {}: stencil reaches {} > {}", f.step, order,
                         margin * f.step, kMaxStencilSpan));
    if (f.nq < 2 * margin + 1 || f.np < 2 * margin + 1)
        fail(ErrorCode::GridTooCoarse, fmt::format("grid has too few nodes for truncation {}", order));

    const DerivativeTable df(f, order, opt.accuracy_order, margin);
    const DerivativeTable dg(g, order, opt.accuracy_order, margin);

    const int nq_in = f.nq - 2 * margin;
    const int np_in = f.np - 2 * margin;
    SampledGrid out;
    out.step = f.step * opt.output_stride;
    out.q0 = f.q(margin);
    out.p0 = f.p(margin);
    out.nq = (nq_in - 1) / opt.output_stride + 1;
    out.np = (np_in - 1) / opt.output_stride + 1;
    out.values.assign(static_cast<std::size_t>(out.nq) * out.np, cplx{});

    // Series coefficients (i/2)^k / k! * C(k, j) * (-1)^j.
    std::vector<std::vector<cplx>> coef(order + 1);
    cplx ipow = 1.0;
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            ipow *= cplx(0.0, 0.5);
            fact *= k;
        }
        for (int j = 0; j <= k; ++j) coef[k].push_back(ipow / fact * binomial(k, j) * ((j % 2) ? -1.0 : 1.0));
    }

    for (int io = 0; io < out.nq; ++io) {
        const int i = io * opt.output_stride;
        for (int jo = 0; jo < out.np; ++jo) {
            const int j = jo * opt.output_stride;
            cplx sum{};
            for (int k = 0; k <= order; ++k)
                for (int l = 0; l <= k; ++l) sum += coef[k][l] * df.d(k - l, l, i, j) * dg.d(l, k - l, i, j);
            out.at(io, jo) = sum;
        }
    }
    return out;
}

SampledGrid resummed_star(const SampledGrid& f, const SampledGrid& g, const BoppOptions& opt) {
    if (opt.output_stride < 1) fail(ErrorCode::InvalidArgument, "bopp_star_oracle: output stride must be >= 1");
    const double h = f.step;
    // Momenta on a lattice of spacing 2h so that the shifts k/2 land on grid nodes.
    const double dk = 2.0 * h;
    const int kn = static_cast<int>(std::floor(opt.k_max / dk));
    const int nk = 2 * kn + 1;
    auto kval = [&](int s) { return (s - kn) * dk; };

    // ghat(kq, kp) = (1/2pi) sum_x g(x) exp(-i k.x) h^2, separably.
    std::vector<cplx> ep(static_cast<std::size_t>(g.np) * nk);
    for (int j = 0; j < g.np; ++j)
        for (int s = 0; s < nk; ++s) ep[static_cast<std::size_t>(j) * nk + s] = std::polar(1.0, -kval(s) * g.p(j));
    std::vector<cplx> eq(static_cast<std::size_t>(g.nq) * nk);
    for (int i = 0; i < g.nq; ++i)
        for (int s = 0; s < nk; ++s) eq[static_cast<std::size_t>(i) * nk + s] = std::polar(1.0, -kval(s) * g.q(i));

    std::vector<cplx> partial(static_cast<std::size_t>(g.nq) * nk, cplx{});
    for (int i = 0; i < g.nq; ++i)
        for (int j = 0; j < g.np; ++j) {
            const cplx v = g.at(i, j);
            if (v == cplx{}) continue;
            for (int s = 0; s < nk; ++s) partial[static_cast<std::size_t>(i) * nk + s] += v * ep[static_cast<std::size_t>(j) * nk + s];
        }
    const double norm = h * h / (2.0 * std::numbers::pi);
    std::vector<cplx> ghat(static_cast<std::size_t>(nk) * nk, cplx{});  // [sq][sp]
    for (int i = 0; i < g.nq; ++i)
        for (int sq = 0; sq < nk; ++sq) {
            const cplx e = eq[static_cast<std::size_t>(i) * nk + sq] * norm;
            for (int sp = 0; sp < nk; ++sp)
                ghat[static_cast<std::size_t>(sq) * nk + sp] += e * partial[static_cast<std::size_t>(i) * nk + sp];
        }

    auto f_at = [&](int i, int j) -> cplx {
        if (i < 0 || j < 0 || i >= f.nq || j >= f.np) return {};
        return f.at(i, j);
    };

    // Output nodes: grid nodes inside the interior box, every stride-th.
    std::vector<int> iq, jp;
    for (int i = 0; i < f.nq; i += opt.output_stride)
        if (std::abs(f.q(i)) <= opt.interior_half_width + 1e-12) iq.push_back(i);
    for (int j = 0; j < f.np; j += opt.output_stride)
        if (std::abs(f.p(j)) <= opt.interior_half_width + 1e-12) jp.push_back(j);

    SampledGrid out;
    out.step = h * opt.output_stride;
    out.nq = static_cast<int>(iq.size());
    out.np = static_cast<int>(jp.size());
    out.q0 = iq.empty() ? 0.0 : f.q(iq.front());
    out.p0 = jp.empty() ? 0.0 : f.p(jp.front());
    out.values.assign(static_cast<std::size_t>(out.nq) * out.np, cplx{});

    const double dk2 = dk * dk / (2.0 * std::numbers::pi);
    std::vector<cplx> phase_q(nk), phase_p(nk);
    for (int a = 0; a < out.nq; ++a) {
        const int i = iq[a];
        for (int s = 0; s < nk; ++s) phase_q[s] = std::polar(1.0, kval(s) * f.q(i));
        for (int b = 0; b < out.np; ++b) {
            const int j = jp[b];
            for (int s = 0; s < nk; ++s) phase_p[s] = std::polar(1.0, kval(s) * f.p(j));
            cplx sum{};
            for (int sq = 0; sq < nk; ++sq) {
                // p shifts by +k_q/2 = (sq - kn) * h.
                const int jj = j + (sq - kn);
                cplx row{};
                for (int sp = 0; sp < nk; ++sp) {
                    // q shifts by -k_p/2 = -(sp - kn) * h.
                    const cplx fv = f_at(i - (sp - kn), jj);
                    if (fv == cplx{}) continue;
                    row += ghat[static_cast<std::size_t>(sq) * nk + sp] * phase_p[sp] * fv;
                }
                sum += row * phase_q[sq];
            }
            out.at(a, b) = sum * dk2;
        }
    }
    return out;
}

}  // namespace

SampledGrid sample_grid(const std::function<std::complex<double>(double, double)>& fn, double half_width,
                        double step) {
    if (!(step > 0.0) || !(half_width > 0.0)) fail(ErrorCode::InvalidArgument, "sample_grid: need positive step and width");
    SampledGrid g;
    g.step = step;
    const int half = static_cast<int>(std::llround(half_width / step));
    g.nq = g.np = 2 * half + 1;
    g.q0 = g.p0 = -half * step;
    g.values.resize(static_cast<std::size_t>(g.nq) * g.np);
    for (int i = 0; i < g.nq; ++i)
        for (int j = 0; j < g.np; ++j) g.at(i, j) = fn(g.q(i), g.p(j));
    return g;
}

int stencil_half_width(int derivative, int accuracy_order) {
    if (derivative == 0) return 0;
    return (derivative + 1) / 2 - 1 + accuracy_order / 2;
}

std::vector<double> central_difference_weights(int derivative, int half_width) {
    const int n = 2 * half_width + 1;
    if (derivative < 0 || derivative >= n)
        fail(ErrorCode::InvalidArgument, "central_difference_weights: stencil too narrow for derivative order");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = i - half_width;
    // Fornberg (1988): c[j][k] weight of node j for derivative k at x0 = 0.
    std::vector<std::vector<double>> c(n, std::vector<double>(derivative + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, derivative);
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - x[i - 1] * c[i - 1][k]) / c2;
                c[i][0] = -c1 * x[i - 1] * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (x[i] * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = x[i] * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][derivative];
    return w;
}

SampledGrid bopp_star_oracle(const SampledGrid& f, const SampledGrid& g, const BoppOptions& options) {
    require_same_geometry(f, g);
    if (options.truncation) return series_star(f, g, *options.truncation, options);
    return resummed_star(f, g, options);
}

}  // namespace sqm
