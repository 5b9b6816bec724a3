#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>

#include "dqmat/errors.hpp"

namespace dqmat {

/// Dual number a = st + du*eps with eps != 0, eps^2 = 0.
///
/// Immutable value type. Comparison uses the lexicographic total order:
/// a > b iff a.st > b.st, or a.st == b.st and a.du > b.du.
struct DualNumber {
    double st = 0.0;  // standard part
    double du = 0.0;  // dual part

    constexpr DualNumber() = default;
    DualNumber(double standard, double dual) : st(standard), du(dual) {
        if (!std::isfinite(st) || !std::isfinite(du))
            throw std::invalid_argument("DualNumber: non-finite component");
    }

    bool appreciable() const { return st != 0.0; }

    friend DualNumber operator+(DualNumber a, DualNumber b) { return {a.st + b.st, a.du + b.du}; }
    friend DualNumber operator-(DualNumber a, DualNumber b) { return {a.st - b.st, a.du - b.du}; }
    friend DualNumber operator-(DualNumber a) { return {-a.st, -a.du}; }
    friend DualNumber operator*(DualNumber a, DualNumber b) {
        return {a.st * b.st, a.st * b.du + a.du * b.st};
    }
    friend DualNumber operator*(double s, DualNumber a) { return {s * a.st, s * a.du}; }
    friend DualNumber operator*(DualNumber a, double s) { return {a.st * s, a.du * s}; }

    friend bool operator==(DualNumber a, DualNumber b) { return a.st == b.st && a.du == b.du; }
    friend std::strong_ordering operator<=>(DualNumber a, DualNumber b) {
        if (a.st != b.st) return a.st < b.st ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.du != b.du) return a.du < b.du ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// b / a.  Defined when a.st != 0, or when a and b are both infinitesimal
/// with a != 0; the free constant of the infinitesimal case is fixed to 0.
inline DualNumber dn_div(DualNumber b, DualNumber a) {
    if (a.st != 0.0) {
        const double q = b.st / a.st;
        return {q, b.du / a.st - q * (a.du / a.st)};
    }
    if (b.st == 0.0 && a.du != 0.0) return {b.du / a.du, 0.0};
    throw DivisionUndefined("dual number division undefined for this (b, a)");
}

inline DualNumber operator/(DualNumber b, DualNumber a) { return dn_div(b, a); }
inline DualNumber operator/(DualNumber b, double a) { return {b.st / a, b.du / a}; }

inline DualNumber dn_abs(DualNumber a) {
    if (a.st != 0.0) return {std::abs(a.st), a.st > 0.0 ? a.du : -a.du};
    return {0.0, std::abs(a.du)};
}

/// Square root; requires a.st > 0 (the defining formula divides by sqrt(a.st)).
inline DualNumber dn_sqrt(DualNumber a) {
    if (a.st <= 0.0) throw SqrtUndefined("dual number sqrt requires positive standard part");
    const double r = std::sqrt(a.st);
    return {r, a.du / (2.0 * r)};
}

/// -1 / 0 / +1 under the total order.
inline int dn_cmp(DualNumber a, DualNumber b) {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

inline bool dn_approx_eq(DualNumber a, DualNumber b, double tol = 1e-12) {
    return std::abs(a.st - b.st) <= tol && std::abs(a.du - b.du) <= tol;
}

}  // namespace dqmat
