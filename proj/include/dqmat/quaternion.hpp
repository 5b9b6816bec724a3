#pragma once

#include <cmath>

namespace dqmat {

/// Quaternion q = [w, x, y, z] = [q0, q_vec] with the Hamilton product.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {0, 0, 0, 0}; }
    static constexpr Quaternion one() { return {1, 0, 0, 0}; }

    bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
    bool is_vector() const { return w == 0.0; }

    friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    friend Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend Quaternion operator*(double s, const Quaternion& q) {
        return {s * q.w, s * q.x, s * q.y, s * q.z};
    }
    friend Quaternion operator*(const Quaternion& q, double s) { return s * q; }
    friend Quaternion operator/(const Quaternion& q, double s) { return (1.0 / s) * q; }

    /// Hamilton product: [p0 q0 - p.q, p0 q_vec + q0 p_vec + p_vec x q_vec].
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }

    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
};

inline Quaternion q_conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double q_norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double q_norm(const Quaternion& q) { return std::sqrt(q_norm_sq(q)); }

/// Scalar part sc(q) = (q + q*)/2, returned as the real number q0.
inline double q_sc(const Quaternion& q) { return q.w; }

/// Euclidean inner product of two quaternions viewed as 4-vectors.
/// Equals sc(p* q) = sc(p q*).
inline double q_dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline bool q_approx_eq(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
    return q_norm(p - q) <= tol;
}

}  // namespace dqmat
