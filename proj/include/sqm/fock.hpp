#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace sqm {

/// Operator on the truncated two-mode number basis |n1, n2>, n1, n2 <= cutoff.
/// Row/column index of |n1, n2> is n1 * (cutoff + 1) + n2.
class FockOperator {
public:
    explicit FockOperator(int cutoff);
    FockOperator(int cutoff, Eigen::MatrixXcd entries);

    static FockOperator identity(int cutoff);

    int cutoff() const noexcept { return cutoff_; }
    int dimension() const noexcept { return (cutoff_ + 1) * (cutoff_ + 1); }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

    int index(int n1, int n2) const;

    /// <m1, m2| O |n1, n2>.
    std::complex<double> element(int m1, int m2, int n1, int n2) const;

    FockOperator adjoint() const;

    FockOperator& operator+=(const FockOperator& other);
    FockOperator& operator-=(const FockOperator& other);
    FockOperator& operator*=(std::complex<double> s);

    friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
    friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
    friend FockOperator operator*(std::complex<double> s, FockOperator a) { return a *= s; }
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);

private:
    void require_same_cutoff(const FockOperator& other) const;

    int cutoff_;
    Eigen::MatrixXcd entries_;
};

struct Ladders {
    FockOperator a;
    FockOperator a_dag;
    FockOperator b;
    FockOperator b_dag;
};

/// Number-basis ladder matrices; a^dag |cutoff> is dropped.
Ladders build_ladders(int cutoff);

/// Bra (m1, m2) and ket (n1, n2) of a perturbation matrix element.
struct MatrixElementQuery {
    int m1 = 0;
    int m2 = 0;
    int n1 = 0;
    int n2 = 0;
};

/// Internal cutoff at which the sextic perturbation is represented exactly.
int exact_cutoff(const MatrixElementQuery& query);

/// Integer part c and radicand r of <m|[(a+a^dag)^2 + (b+b^dag)^2]^3|n> = c sqrt(r).
/// r = (m1! m2!) / (n1! n2!) is held as num/den.
struct ExactElement {
    long long integer = 0;
    double radicand_num = 1.0;
    double radicand_den = 1.0;

    double value() const;
};

ExactElement sextic_element_exact(const MatrixElementQuery& query);

/// Exact equality of c1 sqrt(r1) and c2 sqrt(r2) in integer arithmetic.
bool exactly_equal(const ExactElement& a, const ExactElement& b);

/// gamma * <m1,m2| [(a+a^dag)^2 + (b+b^dag)^2]^3 |n1,n2>. The caller picks what
/// gamma carries (1/(8 omega) or 1/(8 omega^3) times the field/confinement
/// combination). Evaluated with integer ladder products, so diagonal elements
/// are exact integers.
double h1_element(const MatrixElementQuery& query, double omega, double gamma);

/// Same element by dense complex matrix products on a cutoff-truncated space.
/// Exact whenever cutoff >= max(indices) + 6.
double sextic_element_truncated(const MatrixElementQuery& query, int cutoff);

/// Literal closed-form sum I1 + I2 + I3 + I4 per unit gamma, every printed
/// radical and Kronecker delta included. A radical with any negative factor
/// (n - k < 0) contributes zero.
double appendix_I(const MatrixElementQuery& query);

/// The printed first-order diagonal sum Delta1(n1, n2), term by term.
double delta1(int n1, int n2);

struct DiagnosticRow {
    MatrixElementQuery query;
    double oracle = 0.0;
    double appendix = 0.0;
    double abs_diff = 0.0;
    std::optional<double> delta1;  // diagonal pairs only
};

struct DiagnosticReport {
    int max_index = 0;
    std::vector<DiagnosticRow> rows;
    double max_abs_diff = 0.0;
    double max_delta_diff = 0.0;

    const DiagnosticRow* find(const MatrixElementQuery& q) const;
};

/// Tabulates oracle (unit gamma) vs appendix vs Delta1 for all pairs with
/// indices <= max_index. Never throws on disagreement.
DiagnosticReport diagnostic_compare(int max_index);

/// Header m1,m2,n1,n2,oracle,appendix,abs_diff.
void write_diagnostic_csv(std::ostream& out, const DiagnosticReport& report);

}  // namespace sqm
