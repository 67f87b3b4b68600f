#pragma once

#include <compare>
#include <complex>
#include <map>

namespace sqm {

using complex = std::complex<double>;

/// A point (q1, p1, q2, p2) of the four-dimensional phase space.
/// q in GeV^-1, p in GeV (hbar = c = e = 1).
struct PhasePoint {
    double q1 = 0.0;
    double p1 = 0.0;
    double q2 = 0.0;
    double p2 = 0.0;
};

/// Labels (m1, n1) of the mode-1 factor and (m2, n2) of the mode-2 factor of a
/// cross-basis product Phi_{m1 n1}(q1,p1) Phi_{m2 n2}(q2,p2).
struct BasisIndex {
    int m1 = 0;
    int n1 = 0;
    int m2 = 0;
    int n2 = 0;

    auto operator<=>(const BasisIndex&) const = default;
};

enum class Ladder { Lower, Raise };

/// Per-mode constant of the closed product rule
/// Phi_{mn} * Phi_{kl} = c delta_{nk} Phi_{ml}. Independent of omega.
double star_constant();

/// Per-mode integral of a diagonal element Phi_{nn} over (q, p).
double diagonal_integral();

/// Single-mode cross-basis element Phi_{mn}(q, p).
///
/// With Q = sqrt(omega) q, P = p / sqrt(omega) and m >= n,
///   Phi_{mn} = (2/sqrt(2 pi)) (-1)^n sqrt(n!/m!) (sqrt(2)(Q - iP))^{m-n}
///              exp(-(Q^2 + P^2)) L_n^{m-n}(2(Q^2 + P^2)),
/// and Phi_{nm} = conj(Phi_{mn}). These satisfy a^dag * Phi_{mn} =
/// sqrt(m+1) Phi_{m+1,n}, Phi_{mn} * a = sqrt(n+1) Phi_{m,n+1} and
/// a * Phi_{00} = 0 for the star ladder operators.
complex mode_element(int m, int n, double omega, double q, double p);

/// Four-dimensional product element Phi_{m1 n1}(q1,p1) Phi_{m2 n2}(q2,p2).
complex basis_eval(const BasisIndex& idx, double omega, const PhasePoint& pt);

/// Finite complex combination of cross-basis elements sharing one omega.
class PhaseFunction {
public:
    using Terms = std::map<BasisIndex, complex>;

    explicit PhaseFunction(double omega);
    PhaseFunction(double omega, Terms terms);

    static PhaseFunction basis(double omega, const BasisIndex& idx, complex coefficient = 1.0);

    double omega() const noexcept { return omega_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    complex coefficient(const BasisIndex& idx) const;

    /// True when every term is diagonal in both modes (m1 = n1, m2 = n2), so
    /// the function is real for real coefficients and radially symmetric per mode.
    bool is_diagonal() const;

    complex operator()(const PhasePoint& pt) const;

    /// Accumulates c into the coefficient of idx; exact cancellations drop the term.
    void add(const BasisIndex& idx, complex c);

    PhaseFunction& operator+=(const PhaseFunction& other);
    PhaseFunction& operator-=(const PhaseFunction& other);
    PhaseFunction& operator*=(complex s);

    friend PhaseFunction operator+(PhaseFunction a, const PhaseFunction& b) { return a += b; }
    friend PhaseFunction operator-(PhaseFunction a, const PhaseFunction& b) { return a -= b; }
    friend PhaseFunction operator*(complex s, PhaseFunction a) { return a *= s; }
    friend PhaseFunction operator*(PhaseFunction a, complex s) { return a *= s; }

private:
    void require_same_omega(const PhaseFunction& other) const;

    double omega_;
    Terms terms_;
};

/// Largest coefficient-wise |f - g|.
double max_coefficient_difference(const PhaseFunction& f, const PhaseFunction& g);

/// Star product in the closed basis. Throws OmegaMismatch if omegas differ.
PhaseFunction star(const PhaseFunction& f, const PhaseFunction& g);

/// Conjugates coefficients and swaps (m, n) per mode.
PhaseFunction dagger(const PhaseFunction& f);

/// Integral over dq1 dp1 dq2 dp2. Only doubly diagonal terms contribute.
complex integrate(const PhaseFunction& f);

/// op * f where op is a or a^dag (mode 1) or b or b^dag (mode 2).
PhaseFunction ladder_left(Ladder op, int mode, const PhaseFunction& f);

/// f * op for the same ladder symbols.
PhaseFunction ladder_right(const PhaseFunction& f, Ladder op, int mode);

/// Bopp-shifted coordinate operators q_k* and p_k*, acting from the left.
PhaseFunction q_star(int mode, const PhaseFunction& f);
PhaseFunction p_star(int mode, const PhaseFunction& f);

}  // namespace sqm
