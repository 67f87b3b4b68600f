#include "sqm/fock.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <ostream>

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

FockOperator::FockOperator(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) fail(ErrorCode::InvalidArgument, fmt::format("Fock cutoff must be >= 0, got {}", cutoff));
    entries_ = Eigen::MatrixXcd::Zero(dimension(), dimension());
}

FockOperator::FockOperator(int cutoff, Eigen::MatrixXcd entries) : cutoff_(cutoff), entries_(std::move(entries)) {
    if (cutoff < 0) fail(ErrorCode::InvalidArgument, fmt::format("Fock cutoff must be >= 0, got {}", cutoff));
    if (entries_.rows() != dimension() || entries_.cols() != dimension())
        fail(ErrorCode::InvalidArgument, "FockOperator: matrix dimension does not match cutoff");
}

FockOperator FockOperator::identity(int cutoff) {
    FockOperator op(cutoff);
    op.entries_.setIdentity();
    return op;
}

int FockOperator::index(int n1, int n2) const {
    if (n1 < 0 || n2 < 0 || n1 > cutoff_ || n2 > cutoff_)
        fail(ErrorCode::InvalidArgument, fmt::format("state |{},{}> outside cutoff {}", n1, n2, cutoff_));
    return n1 * (cutoff_ + 1) + n2;
}

std::complex<double> FockOperator::element(int m1, int m2, int n1, int n2) const {
    return entries_(index(m1, m2), index(n1, n2));
}

FockOperator FockOperator::adjoint() const { return FockOperator(cutoff_, entries_.adjoint()); }

void FockOperator::require_same_cutoff(const FockOperator& other) const {
    if (cutoff_ != other.cutoff_)
        fail(ErrorCode::InvalidArgument, fmt::format("cutoff mismatch {} vs {}", cutoff_, other.cutoff_));
}

FockOperator& FockOperator::operator+=(const FockOperator& other) {
    require_same_cutoff(other);
    entries_ += other.entries_;
    return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& other) {
    require_same_cutoff(other);
    entries_ -= other.entries_;
    return *this;
}

FockOperator& FockOperator::operator*=(std::complex<double> s) {
    entries_ *= s;
    return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    a.require_same_cutoff(b);
    return FockOperator(a.cutoff_, a.entries_ * b.entries_);
}

Ladders build_ladders(int cutoff) {
    Ladders l{FockOperator(cutoff), FockOperator(cutoff), FockOperator(cutoff), FockOperator(cutoff)};
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(l.a.dimension(), l.a.dimension());
    Eigen::MatrixXcd b = a;
    for (int n1 = 0; n1 <= cutoff; ++n1)
        for (int n2 = 0; n2 <= cutoff; ++n2) {
            if (n1 > 0) a(l.a.index(n1 - 1, n2), l.a.index(n1, n2)) = std::sqrt(static_cast<double>(n1));
            if (n2 > 0) b(l.a.index(n1, n2 - 1), l.a.index(n1, n2)) = std::sqrt(static_cast<double>(n2));
        }
    l.a = FockOperator(cutoff, a);
    l.a_dag = l.a.adjoint();
    l.b = FockOperator(cutoff, b);
    l.b_dag = l.b.adjoint();
    return l;
}

int exact_cutoff(const MatrixElementQuery& q) {
    if (q.m1 < 0 || q.m2 < 0 || q.n1 < 0 || q.n2 < 0)
        fail(ErrorCode::InvalidArgument, "matrix element indices must be non-negative");
    return std::max({q.m1, q.m2, q.n1, q.n2}) + 7;
}

double ExactElement::value() const {
    if (integer == 0) return 0.0;
    if (radicand_num == radicand_den) return static_cast<double>(integer);
    return static_cast<double>(integer) * std::sqrt(radicand_num / radicand_den);
}

ExactElement sextic_element_exact(const MatrixElementQuery& q) {
    // In the unnormalised basis f_j = sqrt(j!) |j>, a^dag f_j = f_{j+1} and
    // a f_j = j f_{j-1}, so every ladder product is an integer matrix.
    const int cutoff = exact_cutoff(q);
    const int d = cutoff + 1;
    auto at = [d](int j1, int j2) { return static_cast<std::size_t>(j1) * d + j2; };

    auto apply_sum = [&](const std::vector<long long>& v, int mode) {
        std::vector<long long> w(v.size(), 0);
        for (int j1 = 0; j1 < d; ++j1)
            for (int j2 = 0; j2 < d; ++j2) {
                const long long c = v[at(j1, j2)];
                if (c == 0) continue;
                const int j = mode == 1 ? j1 : j2;
                if (j + 1 < d) w[mode == 1 ? at(j1 + 1, j2) : at(j1, j2 + 1)] += c;
                if (j > 0) w[mode == 1 ? at(j1 - 1, j2) : at(j1, j2 - 1)] += c * j;
            }
        return w;
    };

    std::vector<long long> v(static_cast<std::size_t>(d) * d, 0);
    v[at(q.n1, q.n2)] = 1;
    for (int rep = 0; rep < 3; ++rep) {
        const auto x1 = apply_sum(apply_sum(v, 1), 1);
        const auto x2 = apply_sum(apply_sum(v, 2), 2);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = x1[i] + x2[i];
    }

    ExactElement out;
    out.integer = v[at(q.m1, q.m2)];
    auto ratio = [&out](int m, int n) {
        for (int j = n + 1; j <= m; ++j) out.radicand_num *= j;
        for (int j = m + 1; j <= n; ++j) out.radicand_den *= j;
    };
    ratio(q.m1, q.n1);
    ratio(q.m2, q.n2);
    return out;
}

bool exactly_equal(const ExactElement& a, const ExactElement& b) {
    if ((a.integer > 0) != (b.integer > 0) || (a.integer < 0) != (b.integer < 0)) return false;
    if (a.integer == 0) return true;
    __extension__ typedef __int128 wide;
    const wide ca = static_cast<wide>(a.integer) * a.integer;
    const wide cb = static_cast<wide>(b.integer) * b.integer;
    const auto n = [](double v) { return static_cast<wide>(static_cast<long long>(v)); };
    return ca * n(a.radicand_num) * n(b.radicand_den) == cb * n(b.radicand_num) * n(a.radicand_den);
}

double h1_element(const MatrixElementQuery& query, double omega, double gamma) {
    if (!(omega > 0.0)) fail(ErrorCode::InvalidArgument, fmt::format("h1_element: omega must be > 0, got {}", omega));
    return gamma * sextic_element_exact(query).value();
}

double sextic_element_truncated(const MatrixElementQuery& q, int cutoff) {
    const auto l = build_ladders(cutoff);
    const auto xa = l.a + l.a_dag;
    const auto xb = l.b + l.b_dag;
    const auto x = xa * xa + xb * xb;
    const auto x3 = x * x * x;
    return x3.element(q.m1, q.m2, q.n1, q.n2).real();
}

namespace {

struct Factor {
    int offset;
    int power;
};

// sqrt(prod (n + offset)^power); zero when any base is negative.
double rad(int n, std::initializer_list<Factor> factors) {
    double prod = 1.0;
    for (const auto& f : factors) {
        const int base = n + f.offset;
        if (base < 0) return 0.0;
        prod *= std::pow(static_cast<double>(base), f.power);
    }
    return std::sqrt(prod);
}

double kd(int m, int n, int offset) { return m == n + offset ? 1.0 : 0.0; }

// Mode-mixing bracket shared by I2 and I3 (the "other" mode's ladder pair).
double mixing_bracket(int n, int m) {
    return rad(n, {{-1, 1}, {0, 1}}) * kd(m, n, -1) + rad(n, {{1, 2}}) * kd(m, n, 0) + rad(n, {{0, 2}}) * kd(m, n, 0) +
           rad(n, {{1, 1}, {2, 1}}) * kd(m, n, 2);
}

// Quartic part of I2 (mode 1) and I3 (mode 2).
double quartic_part(int n, int m) {
    double s = 0.0;
    s += rad(n, {{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}}) * kd(m, n, -4);
    s += (rad(n, {{1, 2}, {0, 1}, {-1, 1}}) + rad(n, {{0, 4}, {-1, 1}}) + rad(n, {{0, 1}, {-1, 1}, {-2, 2}})) *
         kd(m, n, -2);
    s += (rad(n, {{1, 2}, {0, 2}}) + rad(n, {{0, 4}}) + rad(n, {{-1, 2}, {0, 2}})) * kd(m, n, 0);
    s += (rad(n, {{1, 1}, {2, 1}, {3, 2}}) + rad(n, {{1, 1}, {2, 3}}) + rad(n, {{1, 3}, {2, 1}})) * kd(m, n, 2);
    s += rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}) * kd(m, n, 4);
    return s;
}

double appendix_I1(int n, int m) {
    double s = 0.0;
    s += rad(n, {{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {-5, 1}}) * kd(m, n, -6);
    s += (rad(n, {{1, 2}, {0, 1}, {-1, 1}, {-2, 1}, {-3, 1}}) + rad(n, {{0, 3}, {-1, 1}, {-2, 1}, {-3, 1}}) +
          rad(n, {{-1, 2}, {0, 1}, {-2, 3}, {-3, 1}}) + rad(n, {{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}, {-4, 2}})) *
         kd(m, n, -4);
    s += (rad(n, {{1, 2}, {2, 1}, {0, 1}, {-1, 1}}) + rad(n, {{1, 4}, {0, 1}, {-1, 1}}) +
          rad(n, {{0, 3}, {1, 2}, {-1, 1}}) + rad(n, {{-1, 1}, {0, 3}, {1, 2}}) + rad(n, {{-1, 1}, {0, 5}}) +
          rad(n, {{1, 2}, {0, 1}, {-1, 2}, {-2, 2}}) + rad(n, {{0, 3}, {-1, 1}, {-2, 2}}) +
          rad(n, {{0, 1}, {-1, 3}, {-2, 2}}) + rad(n, {{0, 1}, {-1, 1}, {-2, 4}}) +
          rad(n, {{0, 1}, {-1, 1}, {-2, 2}, {-3, 2}})) *
         kd(m, n, -2);
    s += (rad(n, {{1, 2}, {2, 2}, {3, 2}}) + rad(n, {{1, 2}, {2, 4}}) + rad(n, {{-1, 2}, {0, 2}, {1, 4}}) +
          rad(n, {{1, 2}, {0, 2}, {1, 2}}) + rad(n, {{0, 3}, {1, 3}}) + rad(n, {{1, 2}, {0, 4}}) +
          rad(n, {{1, 2}, {0, 2}, {-1, 2}}) + rad(n, {{0, 2}, {-1, 4}}) + rad(n, {{0, 2}, {-1, 2}, {1, 1}, {2, 1}})) *
         kd(m, n, 0);
    s += (rad(n, {{1, 3}, {2, 1}, {3, 2}}) + rad(n, {{0, 2}, {1, 1}, {2, 1}, {3, 2}}) +
          rad(n, {{1, 1}, {2, 3}, {3, 3}}) + rad(n, {{1, 3}, {2, 3}}) + rad(n, {{0, 2}, {1, 1}, {2, 3}}) +
          rad(n, {{-1, 2}, {0, 3}, {1, 1}}) + rad(n, {{1, 5}, {2, 1}}) + rad(n, {{0, 2}, {1, 3}, {2, 1}}) +
          rad(n, {{0, 2}, {1, 3}, {2, 1}}) + rad(n, {{0, 4}, {1, 1}, {2, 1}})) *
         kd(m, n, 2);
    s += (rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}}) + rad(n, {{1, 5}, {0, 1}}) +
          rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 3}}) + rad(n, {{1, 3}, {2, 1}, {3, 1}, {4, 1}}) +
          rad(n, {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}) + rad(n, {{1, 1}, {2, 3}, {3, 1}, {4, 1}})) *
         kd(m, n, 4);
    s += rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}) * kd(m, n, 6);
    return s;
}

double appendix_I4(int n, int m) {
    double s = 0.0;
    s += rad(n, {{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}, {-4, 1}, {-5, 1}}) * kd(m, n, -6);
    s += (rad(n, {{1, 2}, {0, 1}, {-1, 1}, {-2, 1}, {-3, 1}}) + rad(n, {{0, 3}, {-1, 1}, {-2, 1}, {-3, 1}}) +
          rad(n, {{1, 2}, {-1, 2}, {-2, 2}, {0, 1}}) + rad(n, {{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}, {-4, 2}})) *
         kd(m, n, -4);
    s += (rad(n, {{1, 2}, {2, 1}, {0, 1}, {-1, 1}}) + rad(n, {{1, 4}, {0, 1}, {-1, 1}}) +
          rad(n, {{0, 3}, {1, 2}, {-1, 1}}) + rad(n, {{-1, 1}, {0, 3}, {1, 2}}) + rad(n, {{-1, 1}, {0, 5}}) +
          rad(n, {{1, 2}, {0, 1}, {-1, 2}, {-2, 2}}) + rad(n, {{0, 3}, {-1, 1}, {-2, 2}}) +
          rad(n, {{0, 1}, {-1, 3}, {-2, 2}}) + rad(n, {{0, 1}, {-1, 1}, {-2, 4}})) *
         kd(m, n, -2);
    s += (rad(n, {{1, 2}, {2, 2}, {3, 2}}) + rad(n, {{1, 2}, {2, 4}}) + rad(n, {{-1, 2}, {0, 2}, {1, 4}}) +
          rad(n, {{1, 2}, {0, 2}, {1, 2}}) + rad(n, {{1, 2}, {0, 4}}) + rad(n, {{1, 5}, {0, 1}}) +
          rad(n, {{0, 3}, {1, 3}}) + rad(n, {{0, 2}, {-1, 4}}) + rad(n, {{1, 2}, {0, 2}, {-1, 2}})) *
         kd(m, n, 0);
    s += (rad(n, {{1, 3}, {2, 1}, {3, 2}}) + rad(n, {{0, 2}, {1, 1}, {2, 1}, {3, 2}}) +
          rad(n, {{1, 1}, {2, 3}, {3, 3}}) + rad(n, {{1, 3}, {2, 3}}) + rad(n, {{0, 2}, {1, 1}, {2, 3}}) +
          rad(n, {{-1, 2}, {0, 3}, {1, 1}}) + rad(n, {{1, 5}, {2, 1}}) + rad(n, {{0, 2}, {1, 3}, {2, 1}}) +
          rad(n, {{0, 2}, {1, 3}, {2, 1}}) + rad(n, {{0, 4}, {1, 1}, {2, 1}}) +
          rad(n, {{0, 2}, {-1, 2}, {1, 1}, {2, 1}})) *
         kd(m, n, 2);
    s += (rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}}) + rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 3}}) +
          rad(n, {{1, 1}, {2, 3}, {3, 1}, {4, 1}}) + rad(n, {{1, 3}, {2, 1}, {3, 1}, {4, 1}}) +
          rad(n, {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}})) *
         kd(m, n, 4);
    s += rad(n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}) * kd(m, n, 6);
    return s;
}

}  // namespace

double appendix_I(const MatrixElementQuery& q) {
    if (q.m1 < 0 || q.m2 < 0 || q.n1 < 0 || q.n2 < 0)
        fail(ErrorCode::InvalidArgument, "appendix_I: indices must be non-negative");
    const double i1 = appendix_I1(q.n1, q.m1) * kd(q.m2, q.n2, 0);
    const double i2 = quartic_part(q.n1, q.m1) * mixing_bracket(q.n2, q.m2);
    const double i3 = quartic_part(q.n2, q.m2) * mixing_bracket(q.n1, q.m1);
    const double i4 = kd(q.m1, q.n1, 0) * appendix_I4(q.n2, q.m2);
    return i1 + i2 + i3 + i4;
}

double delta1(int n1, int n2) {
    if (n1 < 0 || n2 < 0) fail(ErrorCode::InvalidArgument, "delta1: quantum numbers must be non-negative");
    const double a = n1;
    const double b = n2;
    double s = 0.0;
    s += (a + 1) * (a + 2) * (a + 3) + (a + 1) * (a + 2) * (a + 2) + (a - 1) * a * (a + 1) * (a + 1);
    s += (a + 1) * a * (a + 1) + std::sqrt(a * a * a * (a + 1) * (a + 1) * (a + 1)) + (a + 1) * a * a +
         (a + 1) * a * (a - 1);
    s += a * (a - 1) * (a - 1) + a * (a - 1) * (a - 2) + 3 * (a + 1) * a * (b + 1) + 3 * (a + 1) * a * b;
    s += 3 * a * a * (b + 1) + 3 * a * a * b + 3 * (a - 1) * a * (b + 1) + 3 * (a - 1) * a * b +
         3 * (b + 1) * b * (a + 1);
    s += 3 * (b + 1) * b * a + 3 * b * b * (a + 1) + 3 * b * b * a + 3 * (b - 1) * b * (a + 1) + 3 * (b - 1) * b * a;
    s += (b + 1) * (b + 2) * (b + 3) + (b + 1) * (b + 2) * (b + 2) + (b - 1) * b * (b + 1) * (b + 1) +
         std::sqrt(b * b * b * (b + 1) * (b + 1) * (b + 1));
    s += std::sqrt((b + 1) * (b + 1) * b * b * b * b) + (b + 1) * b * (b - 1) + b * (b - 1) * (b - 1) +
         b * (b - 1) * (b - 2);
    return s;
}

const DiagnosticRow* DiagnosticReport::find(const MatrixElementQuery& q) const {
    for (const auto& r : rows)
        if (r.query.m1 == q.m1 && r.query.m2 == q.m2 && r.query.n1 == q.n1 && r.query.n2 == q.n2) return &r;
    return nullptr;
}

DiagnosticReport diagnostic_compare(int max_index) {
    if (max_index < 0) fail(ErrorCode::InvalidArgument, "diagnostic_compare: max_index must be >= 0");
    DiagnosticReport report;
    report.max_index = max_index;
    for (int m1 = 0; m1 <= max_index; ++m1)
        for (int m2 = 0; m2 <= max_index; ++m2)
            for (int n1 = 0; n1 <= max_index; ++n1)
                for (int n2 = 0; n2 <= max_index; ++n2) {
                    DiagnosticRow row;
                    row.query = {m1, m2, n1, n2};
                    row.oracle = h1_element(row.query, 1.0, 1.0);
                    row.appendix = appendix_I(row.query);
                    row.abs_diff = std::abs(row.oracle - row.appendix);
                    if (m1 == n1 && m2 == n2) {
                        row.delta1 = delta1(n1, n2);
                        report.max_delta_diff = std::max(report.max_delta_diff, std::abs(row.oracle - *row.delta1));
                    }
                    report.max_abs_diff = std::max(report.max_abs_diff, row.abs_diff);
                    report.rows.push_back(row);
                }
    return report;
}

void write_diagnostic_csv(std::ostream& out, const DiagnosticReport& report) {
    out << "m1,m2,n1,n2,oracle,appendix,abs_diff\n";
    for (const auto& r : report.rows)
        out << fmt::format("{},{},{},{},{:.12g},{:.12g},{:.12g}\n", r.query.m1, r.query.m2, r.query.n1, r.query.n2,
                           r.oracle, r.appendix, r.abs_diff);
}

}  // namespace sqm
