#pragma once

#include <cmath>

#include "dqmat/dual_quaternion.hpp"
#include "dqmat/errors.hpp"
#include "dqmat/random.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

/// Projection onto the set of unit dual quaternions.
///
/// Appreciable case: normalization
///   u_st = q_st/|q_st|,
///   u_I  = q_I/|q_st| - u_st * sc(q_st* q_I)/|q_st|^2.
/// Infinitesimal case (q_st ~ 0, q_I != 0): u_st = q_I/|q_I|, u_I = 0
/// (the dual part is free up to one scalar constraint; zero is feasible).
inline DualQuaternion project_unit_dq(const DualQuaternion& q) {
    const double m = q_norm(q.st);
    if (m > kAppreciableTol) {
        const Quaternion u_st = q.st / m;
        const double s = q_dot(q.st, q.du) / (m * m);
        const Quaternion u_du = q.du / m - u_st * s;
        return {u_st, u_du};
    }
    const double md = q_norm(q.du);
    if (md <= kAppreciableTol) throw ZeroInput("project_unit_dq: zero input");
    return {q.du / md, Quaternion::zero()};
}

/// Projection onto the set of dual quaternion vectors with unit 2-norm.
/// Same two-branch structure, with sc(q_st* q_I) = sum_i <st_i, du_i>.
inline DQVector project_unit_vec(const DQVector& q) {
    double st_sq = 0.0, cross = 0.0, du_sq = 0.0;
    for (const auto& e : q.entries()) {
        st_sq += q_norm_sq(e.st);
        cross += q_dot(e.st, e.du);
        du_sq += q_norm_sq(e.du);
    }
    const double m = std::sqrt(st_sq);
    DQVector u(q.size());
    if (m > kAppreciableTol) {
        const double s = cross / (m * m);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Quaternion u_st = q[i].st / m;
            u[i] = {u_st, q[i].du / m - u_st * s};
        }
        return u;
    }
    const double md = std::sqrt(du_sq);
    if (md <= kAppreciableTol) throw ZeroInput("project_unit_vec: zero input");
    for (std::size_t i = 0; i < q.size(); ++i) u[i] = {q[i].du / md, Quaternion::zero()};
    return u;
}

inline Quaternion random_quaternion(Rng& rng) {
    return {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
}

inline DualQuaternion random_dq(Rng& rng) {
    return {random_quaternion(rng), random_quaternion(rng)};
}

/// Random unit dual quaternion: i.i.d. standard-normal components, projected.
inline DualQuaternion random_unit_dq(Rng& rng) { return project_unit_dq(random_dq(rng)); }

inline DQVector random_vec(Rng& rng, std::size_t n) {
    DQVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = random_dq(rng);
    return v;
}

/// Random dual quaternion vector with unit 2-norm.
inline DQVector random_unit_vec(Rng& rng, std::size_t n) {
    return project_unit_vec(random_vec(rng, n));
}

}  // namespace dqmat
