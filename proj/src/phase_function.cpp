#include "sqm/phase_function.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "sqm/errors.hpp"
#include "sqm/special.hpp"

namespace sqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_mode(int mode) {
    if (mode != 1 && mode != 2) fail(ErrorCode::InvalidArgument, fmt::format("mode must be 1 or 2, got {}", mode));
}

void require_positive_omega(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        fail(ErrorCode::InvalidArgument, fmt::format("omega must be positive and finite, got {}", omega));
}

}  // namespace

double star_constant() { return 1.0 / std::sqrt(kTwoPi); }

double diagonal_integral() { return std::sqrt(kTwoPi); }

complex mode_element(int m, int n, double omega, double q, double p) {
    require_positive_omega(omega);
    if (m < 0 || n < 0) fail(ErrorCode::InvalidArgument, "mode_element: negative index");
    if (m < n) return std::conj(mode_element(n, m, omega, q, p));

    const double Q = std::sqrt(omega) * q;
    const double P = p / std::sqrt(omega);
    const double r2 = Q * Q + P * P;
    const int d = m - n;

    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double prefactor = 2.0 * star_constant() * sign / sqrt_factorial_ratio(m, n);
    const complex z = std::sqrt(2.0) * complex(Q, -P);
    return prefactor * std::pow(z, d) * std::exp(-r2) * laguerre(n, d, 2.0 * r2);
}

complex basis_eval(const BasisIndex& idx, double omega, const PhasePoint& pt) {
    return mode_element(idx.m1, idx.n1, omega, pt.q1, pt.p1) * mode_element(idx.m2, idx.n2, omega, pt.q2, pt.p2);
}

PhaseFunction::PhaseFunction(double omega) : omega_(omega) { require_positive_omega(omega); }

PhaseFunction::PhaseFunction(double omega, Terms terms) : omega_(omega) {
    require_positive_omega(omega);
    for (const auto& [idx, c] : terms) add(idx, c);
}

PhaseFunction PhaseFunction::basis(double omega, const BasisIndex& idx, complex coefficient) {
    PhaseFunction f(omega);
    f.add(idx, coefficient);
    return f;
}

complex PhaseFunction::coefficient(const BasisIndex& idx) const {
    const auto it = terms_.find(idx);
    return it == terms_.end() ? complex{} : it->second;
}

bool PhaseFunction::is_diagonal() const {
    for (const auto& [idx, c] : terms_)
        if (idx.m1 != idx.n1 || idx.m2 != idx.n2) return false;
    return true;
}

complex PhaseFunction::operator()(const PhasePoint& pt) const {
    complex sum{};
    for (const auto& [idx, c] : terms_) sum += c * basis_eval(idx, omega_, pt);
    return sum;
}

void PhaseFunction::add(const BasisIndex& idx, complex c) {
    if (idx.m1 < 0 || idx.n1 < 0 || idx.m2 < 0 || idx.n2 < 0)
        fail(ErrorCode::InvalidArgument, "basis index must be non-negative");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        fail(ErrorCode::InvalidArgument, "coefficient must be finite");
    if (c == complex{}) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == complex{}) terms_.erase(it);
    }
}

void PhaseFunction::require_same_omega(const PhaseFunction& other) const {
    if (omega_ != other.omega_)
        fail(ErrorCode::OmegaMismatch, fmt::format("omega mismatch: {} vs {}", omega_, other.omega_));
}

PhaseFunction& PhaseFunction::operator+=(const PhaseFunction& other) {
    require_same_omega(other);
    for (const auto& [idx, c] : other.terms_) add(idx, c);
    return *this;
}

PhaseFunction& PhaseFunction::operator-=(const PhaseFunction& other) {
    require_same_omega(other);
    for (const auto& [idx, c] : other.terms_) add(idx, -c);
    return *this;
}

PhaseFunction& PhaseFunction::operator*=(complex s) {
    if (s == complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
}

double max_coefficient_difference(const PhaseFunction& f, const PhaseFunction& g) {
    double worst = 0.0;
    for (const auto& [idx, c] : f.terms()) worst = std::max(worst, std::abs(c - g.coefficient(idx)));
    for (const auto& [idx, c] : g.terms()) worst = std::max(worst, std::abs(c - f.coefficient(idx)));
    return worst;
}

PhaseFunction star(const PhaseFunction& f, const PhaseFunction& g) {
    if (f.omega() != g.omega())
        fail(ErrorCode::OmegaMismatch, fmt::format("star: omega mismatch {} vs {}", f.omega(), g.omega()));
    const double c2 = star_constant() * star_constant();
    PhaseFunction out(f.omega());
    for (const auto& [fi, fc] : f.terms()) {
        for (const auto& [gi, gc] : g.terms()) {
            if (fi.n1 != gi.m1 || fi.n2 != gi.m2) continue;
            out.add({fi.m1, gi.n1, fi.m2, gi.n2}, c2 * fc * gc);
        }
    }
    return out;
}

PhaseFunction dagger(const PhaseFunction& f) {
    PhaseFunction out(f.omega());
    for (const auto& [idx, c] : f.terms()) out.add({idx.n1, idx.m1, idx.n2, idx.m2}, std::conj(c));
    return out;
}

complex integrate(const PhaseFunction& f) {
    const double per_mode = diagonal_integral();
    complex sum{};
    for (const auto& [idx, c] : f.terms())
        if (idx.m1 == idx.n1 && idx.m2 == idx.n2) sum += c;
    return sum * per_mode * per_mode;
}

PhaseFunction ladder_left(Ladder op, int mode, const PhaseFunction& f) {
    require_mode(mode);
    PhaseFunction out(f.omega());
    for (const auto& [idx, c] : f.terms()) {
        BasisIndex next = idx;
        int& row = (mode == 1) ? next.m1 : next.m2;
        const int m = row;
        if (op == Ladder::Lower) {
            if (m == 0) continue;
            row = m - 1;
            out.add(next, c * std::sqrt(static_cast<double>(m)));
        } else {
            row = m + 1;
            out.add(next, c * std::sqrt(static_cast<double>(m + 1)));
        }
    }
    return out;
}

PhaseFunction ladder_right(const PhaseFunction& f, Ladder op, int mode) {
    require_mode(mode);
    PhaseFunction out(f.omega());
    for (const auto& [idx, c] : f.terms()) {
        BasisIndex next = idx;
        int& col = (mode == 1) ? next.n1 : next.n2;
        const int n = col;
        if (op == Ladder::Lower) {
            col = n + 1;
            out.add(next, c * std::sqrt(static_cast<double>(n + 1)));
        } else {
            if (n == 0) continue;
            col = n - 1;
            out.add(next, c * std::sqrt(static_cast<double>(n)));
        }
    }
    return out;
}

PhaseFunction q_star(int mode, const PhaseFunction& f) {
    const double s = 1.0 / std::sqrt(2.0 * f.omega());
    return s * (ladder_left(Ladder::Lower, mode, f) + ladder_left(Ladder::Raise, mode, f));
}

PhaseFunction p_star(int mode, const PhaseFunction& f) {
    const complex s(0.0, -std::sqrt(f.omega() / 2.0));
    return s * (ladder_left(Ladder::Lower, mode, f) - ladder_left(Ladder::Raise, mode, f));
}

}  // namespace sqm
