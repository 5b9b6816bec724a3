#pragma once

#include <cmath>

#include "dqmat/dual_number.hpp"
#include "dqmat/errors.hpp"
#include "dqmat/quaternion.hpp"

namespace dqmat {

/// Dual quaternion q = st + du*eps, a pair of quaternions.
///
/// Unit dual quaternions (|st| = 1 and st du* + du st* = 0) represent
/// rigid-body poses.
struct DualQuaternion {
    Quaternion st{};
    Quaternion du{};

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion& standard, const Quaternion& dual)
        : st(standard), du(dual) {}

    static constexpr DualQuaternion zero() { return {Quaternion::zero(), Quaternion::zero()}; }
    static constexpr DualQuaternion one() { return {Quaternion::one(), Quaternion::zero()}; }
    static DualQuaternion from_dual_number(DualNumber a) {
        return {{a.st, 0, 0, 0}, {a.du, 0, 0, 0}};
    }

    bool appreciable() const { return !st.is_zero(); }
    bool is_zero() const { return st.is_zero() && du.is_zero(); }

    /// |st| = 1 and st du* + du st* = 0, both within tol.  The second
    /// condition reduces to the 8-component dot product of st and du.
    bool is_unit(double tol = 1e-9) const {
        return std::abs(q_norm(st) - 1.0) <= tol && 2.0 * std::abs(q_dot(st, du)) <= tol;
    }

    friend DualQuaternion operator+(const DualQuaternion& p, const DualQuaternion& q) {
        return {p.st + q.st, p.du + q.du};
    }
    friend DualQuaternion operator-(const DualQuaternion& p, const DualQuaternion& q) {
        return {p.st - q.st, p.du - q.du};
    }
    friend DualQuaternion operator-(const DualQuaternion& q) { return {-q.st, -q.du}; }
    friend DualQuaternion operator*(double s, const DualQuaternion& q) {
        return {s * q.st, s * q.du};
    }
    friend DualQuaternion operator*(const DualQuaternion& q, double s) { return s * q; }

    /// (p.st q.st) + (p.st q.du + p.du q.st) eps.
    friend DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
        return {p.st * q.st, p.st * q.du + p.du * q.st};
    }

    /// Product with a dual number (dual numbers commute with dual quaternions).
    friend DualQuaternion operator*(const DualQuaternion& q, DualNumber a) {
        return {a.st * q.st, a.st * q.du + a.du * q.st};
    }
    friend DualQuaternion operator*(DualNumber a, const DualQuaternion& q) { return q * a; }

    friend bool operator==(const DualQuaternion& p, const DualQuaternion& q) {
        return p.st == q.st && p.du == q.du;
    }
};

inline DualQuaternion dq_conj(const DualQuaternion& q) { return {q_conj(q.st), q_conj(q.du)}; }

/// Magnitude |q| as a dual number: (|st|, sc(st* du)/|st|) when appreciable,
/// otherwise |du| eps.
inline DualNumber dq_magnitude(const DualQuaternion& q) {
    if (q.appreciable()) {
        const double m = q_norm(q.st);
        return {m, q_dot(q.st, q.du) / m};
    }
    return {0.0, q_norm(q.du)};
}

/// l2*-norm: (|st|, |du|^2 / (2|st|)) when appreciable, otherwise |du| eps.
inline DualNumber dq_mag2star(const DualQuaternion& q) {
    if (q.appreciable()) {
        const double m = q_norm(q.st);
        return {m, q_norm_sq(q.du) / (2.0 * m)};
    }
    return {0.0, q_norm(q.du)};
}

/// q / a for a dual number a.  Defined when a.st != 0, or when a.st == 0,
/// q.st == 0 and a.du != 0; the free quaternion of the infinitesimal case is
/// fixed to zero.
inline DualQuaternion dq_div_dn(const DualQuaternion& q, DualNumber a) {
    if (a.st != 0.0) {
        return {q.st / a.st, q.du / a.st - q.st * (a.du / (a.st * a.st))};
    }
    if (q.st.is_zero() && a.du != 0.0) return {q.du / a.du, Quaternion::zero()};
    throw DivisionUndefined("dual quaternion division by dual number undefined");
}

inline bool dq_approx_eq(const DualQuaternion& p, const DualQuaternion& q, double tol = 1e-12) {
    return q_approx_eq(p.st, q.st, tol) && q_approx_eq(p.du, q.du, tol);
}

/// Euclidean norm over all 8 real components.
inline double dq_norm2R(const DualQuaternion& q) {
    return std::sqrt(q_norm_sq(q.st) + q_norm_sq(q.du));
}

}  // namespace dqmat
