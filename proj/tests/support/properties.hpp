#pragma once

// Randomized law checks shared by the unit tests and the acceptance suite.
// Each function returns human-readable failure descriptions (empty = pass).

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dqmat/dual_number.hpp"
#include "dqmat/dual_quaternion.hpp"
#include "dqmat/matrix.hpp"
#include "dqmat/projections.hpp"
#include "dqmat/quaternion.hpp"
#include "dqmat/random.hpp"
#include "dqmat/vector.hpp"

namespace dqmat::testing {

inline std::string fmt(const char* what, int i, double got) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s (case %d, got %.3e)", what, i, got);
    return buf;
}

inline DualNumber random_dn(Rng& rng) { return {rng.normal(), rng.normal()}; }

inline std::vector<std::string> dual_scalar_properties(int cases, std::uint64_t seed = 101) {
    std::vector<std::string> fails;
    Rng rng(seed);

    for (int i = 0; i < cases; ++i) {
        // division inverts multiplication for appreciable divisors
        DualNumber a = random_dn(rng), b = random_dn(rng);
        if (std::abs(a.st) < 1e-3) a.st += std::copysign(1.0, a.st == 0 ? 1.0 : a.st);
        const DualNumber back = dn_div(b, a) * a;
        const double scale = std::abs(b.st) + std::abs(b.du) + 1.0;
        if (std::abs(back.st - b.st) + std::abs(back.du - b.du) > 1e-12 * scale) {
            fails.push_back(fmt("dn_div/dn_mul roundtrip", i, std::abs(back.st - b.st)));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // q conj(q) is dual-number valued and equals |q|^2
        DualQuaternion q = random_dq(rng);
        if (q.st.is_zero()) q.st.w = 1.0;
        const DualQuaternion p = q * dq_conj(q);
        const double vec_mag = std::abs(p.st.x) + std::abs(p.st.y) + std::abs(p.st.z) +
                               std::abs(p.du.x) + std::abs(p.du.y) + std::abs(p.du.z);
        if (vec_mag > 1e-12 * (1.0 + q_norm_sq(q.st) + q_norm_sq(q.du))) {
            fails.push_back(fmt("q conj(q) not scalar", i, vec_mag));
            break;
        }
        const DualNumber m = dq_magnitude(q);
        const DualNumber m2 = m * m;
        if (std::abs(p.st.w - m2.st) + std::abs(p.du.w - m2.du) > 1e-10 * (1.0 + m2.st)) {
            fails.push_back(fmt("q conj(q) != |q|^2", i, std::abs(p.st.w - m2.st)));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // conj(p q) = conj(q) conj(p)
        const DualQuaternion p = random_dq(rng), q = random_dq(rng);
        const DualQuaternion lhs = dq_conj(p * q);
        const DualQuaternion rhs = dq_conj(q) * dq_conj(p);
        if (!dq_approx_eq(lhs, rhs, 1e-12 * (1.0 + dq_norm2R(p) * dq_norm2R(q)))) {
            fails.push_back(fmt("conj anti-homomorphism", i, dq_norm2R(lhs - rhs)));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // products of unit dual quaternions stay unit
        const DualQuaternion p = random_unit_dq(rng), q = random_unit_dq(rng);
        if (!(p * q).is_unit(1e-10)) {
            fails.push_back(fmt("unit product not unit", i, 0.0));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // dn_cmp: antisymmetric, transitive
        const DualNumber a = random_dn(rng), b = random_dn(rng), c = random_dn(rng);
        if (dn_cmp(a, b) != -dn_cmp(b, a)) {
            fails.push_back(fmt("dn_cmp antisymmetry", i, 0.0));
            break;
        }
        if (dn_cmp(a, b) >= 0 && dn_cmp(b, c) >= 0 && dn_cmp(a, c) < 0) {
            fails.push_back(fmt("dn_cmp transitivity", i, 0.0));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // quaternion product: associative, distributive
        const Quaternion p = random_quaternion(rng), q = random_quaternion(rng),
                         r = random_quaternion(rng);
        const double scale = 1.0 + q_norm(p) * q_norm(q) * q_norm(r);
        if (q_norm((p * q) * r - p * (q * r)) > 1e-12 * scale) {
            fails.push_back(fmt("q_mul associativity", i, q_norm((p * q) * r - p * (q * r))));
            break;
        }
        if (q_norm(p * (q + r) - (p * q + p * r)) > 1e-12 * scale) {
            fails.push_back(fmt("q_mul distributivity", i, 0.0));
            break;
        }
    }

    // non-commutativity witness: i j = k but j i = -k
    const Quaternion qi{0, 1, 0, 0}, qj{0, 0, 1, 0};
    if (qi * qj == qj * qi) fails.push_back("q_mul unexpectedly commutative on i, j");

    return fails;
}

inline DQMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m) {
    DQMatrix Q(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) Q.at(i, j) = random_dq(rng);
    return Q;
}

inline DQMatrix random_hermitian(Rng& rng, std::size_t n) {
    return make_hermitian(random_matrix(rng, n, n));
}

inline std::vector<std::string> linalg_properties(int cases, std::uint64_t seed = 202) {
    std::vector<std::string> fails;
    Rng rng(seed);

    for (int i = 0; i < cases; ++i) {
        // F-norm dual part of a Hermitian matrix vs an independent trace.
        // Note tr(Q_st Q_I) itself is generally non-real over quaternions;
        // only its scalar part enters the norm.  Hermitian diagonals are
        // real in both parts.
        const std::size_t n = 2 + rng.uniform_index(4);
        const DQMatrix Q = random_hermitian(rng, n);
        for (std::size_t d = 0; d < n; ++d) {
            const DualQuaternion& e = Q.at(d, d);
            if (std::abs(e.st.x) + std::abs(e.st.y) + std::abs(e.st.z) + std::abs(e.du.x) +
                    std::abs(e.du.y) + std::abs(e.du.z) >
                1e-12) {
                fails.push_back(fmt("Hermitian diagonal not real", i, 0.0));
                break;
            }
        }
        const DualNumber f = mat_normF(Q);
        Quaternion trace = Quaternion::zero();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) trace = trace + Q.at(r, k).st * Q.at(k, r).du;
        double st_sq = 0.0;
        for (const auto& q : Q.entries()) st_sq += q_norm_sq(q.st);
        const double expected = q_sc(trace) / std::sqrt(st_sq);
        if (std::abs(f.du - expected) > 1e-10 * (1.0 + std::abs(expected))) {
            fails.push_back(fmt("mat_normF dual part vs trace", i, std::abs(f.du - expected)));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // ||Q x||_2R <= (||Q_st||_F + ||Q_I||_F) ||x||_2R
        const std::size_t n = 1 + rng.uniform_index(5);
        const std::size_t m = 1 + rng.uniform_index(5);
        const DQMatrix Q = random_matrix(rng, n, m);
        DQVector x(m);
        for (std::size_t j = 0; j < m; ++j) x[j] = random_dq(rng);
        double st_sq = 0.0, du_sq = 0.0;
        for (const auto& q : Q.entries()) {
            st_sq += q_norm_sq(q.st);
            du_sq += q_norm_sq(q.du);
        }
        const double bound = (std::sqrt(st_sq) + std::sqrt(du_sq)) * vec_norm2R(x);
        if (vec_norm2R(mat_vec(Q, x)) > bound * (1.0 + 1e-12)) {
            fails.push_back(fmt("mat_vec norm bound", i, vec_norm2R(mat_vec(Q, x)) - bound));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // inner(x, y) = conj(inner(y, x))
        const std::size_t n = 1 + rng.uniform_index(6);
        DQVector x(n), y(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = random_dq(rng);
            y[j] = random_dq(rng);
        }
        const DualQuaternion a = inner(x, y), b = dq_conj(inner(y, x));
        if (!dq_approx_eq(a, b, 1e-12 * (1.0 + dq_norm2R(a)))) {
            fails.push_back(fmt("inner conjugate symmetry", i, dq_norm2R(a - b)));
            break;
        }
    }

    for (int i = 0; i < cases; ++i) {
        // rank_one(lambda, u) u = u lambda for unit-norm u
        const std::size_t n = 1 + rng.uniform_index(6);
        const DQVector u = random_unit_vec(rng, n);
        const DualNumber lambda = random_dn(rng);
        const DQVector lhs = mat_vec(rank_one(lambda, u), u);
        const DQVector rhs = u * lambda;
        if (vec_norm2R(lhs - rhs) > 1e-10 * (1.0 + std::abs(lambda.st) + std::abs(lambda.du))) {
            fails.push_back(fmt("rank_one eigen identity", i, vec_norm2R(lhs - rhs)));
            break;
        }
    }

    return fails;
}

/// Optimality of the unit projections under the total order (the closed-form
/// projection is never beaten by feasible samples), plus feasibility,
/// idempotence, and the dual-part characterization.
inline std::vector<std::string> projection_properties(int inputs, int samples,
                                                      std::uint64_t seed = 303) {
    std::vector<std::string> fails;
    Rng rng(seed);

    auto dist_sq = [](const DualQuaternion& v, const DualQuaternion& q) {
        const DualNumber d = dq_magnitude(v - q);
        return d * d;
    };

    for (int i = 0; i < inputs && fails.empty(); ++i) {
        DualQuaternion q = random_dq(rng);
        if (q_norm(q.st) < 1e-2) q.st.w += 1.0;  // keep appreciable
        const DualQuaternion u = project_unit_dq(q);
        if (!u.is_unit(1e-10)) {
            fails.push_back(fmt("project_unit_dq infeasible", i, 0.0));
            break;
        }
        if (dq_norm2R(project_unit_dq(u) - u) > 1e-10) {
            fails.push_back(fmt("project_unit_dq not idempotent", i, 0.0));
            break;
        }
        // Prop: dual part is orthogonal to the standard direction
        if (std::abs(q_dot(u.du, q.st)) > 1e-10 * (1.0 + q_norm(q.st))) {
            fails.push_back(fmt("projected dual part not orthogonal", i, q_dot(u.du, q.st)));
            break;
        }
        const DualNumber best = dist_sq(u, q);
        for (int s = 0; s < samples; ++s) {
            DualQuaternion v;
            if (s % 2 == 0) {
                v = random_unit_dq(rng);
            } else {
                const double delta = std::pow(10.0, -4.0 * rng.uniform());
                v = project_unit_dq(u + delta * random_dq(rng));
            }
            if (dn_cmp(best, dist_sq(v, q)) > 0) {
                fails.push_back(fmt("projection beaten (unit dq)", i, 0.0));
                break;
            }
        }
        // Prop 3.2: among feasible dual parts, u.du is closest to q.du/|q.st|
        const double m = q_norm(q.st);
        const Quaternion target = q.du / m;
        const double best_du = q_norm_sq(u.du - target);
        for (int s = 0; s < 50; ++s) {
            Quaternion w = random_quaternion(rng);
            w = w - q.st * (q_dot(w, q.st) / q_norm_sq(q.st));
            if (q_norm_sq(w - target) < best_du - 1e-12) {
                fails.push_back(fmt("dual-part projection beaten", i, best_du - q_norm_sq(w - target)));
                break;
            }
        }
    }

    for (int i = 0; i < inputs && fails.empty(); ++i) {
        const std::size_t n = 2 + rng.uniform_index(4);
        DQVector q = random_vec(rng, n);
        const DQVector u = project_unit_vec(q);
        if (std::abs(vec_norm2(u).st - 1.0) > 1e-10 || std::abs(vec_norm2(u).du) > 1e-10) {
            fails.push_back(fmt("project_unit_vec not unit norm", i, vec_norm2(u).st - 1.0));
            break;
        }
        if (vec_norm2R(project_unit_vec(u) - u) > 1e-10) {
            fails.push_back(fmt("project_unit_vec not idempotent", i, 0.0));
            break;
        }
        // Prop 3.4: real-scalar constraint sum <u_I,i, q_st,i> = 0
        double cross = 0.0, qst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cross += q_dot(u[k].du, q[k].st);
            qst += q_norm_sq(q[k].st);
        }
        if (std::abs(cross) > 1e-9 * (1.0 + std::sqrt(qst))) {
            fails.push_back(fmt("vector dual-part constraint", i, cross));
            break;
        }
        auto vdist_sq = [](const DQVector& v, const DQVector& w) {
            const DualNumber d = vec_norm2(v - w);
            return d * d;
        };
        const DualNumber best = vdist_sq(u, q);
        for (int s = 0; s < samples; ++s) {
            DQVector v(n);
            if (s % 2 == 0) {
                v = random_unit_vec(rng, n);
            } else {
                const double delta = std::pow(10.0, -4.0 * rng.uniform());
                DQVector pert = u;
                for (std::size_t k = 0; k < n; ++k) pert[k] = pert[k] + delta * random_dq(rng);
                v = project_unit_vec(pert);
            }
            if (dn_cmp(best, vdist_sq(v, q)) > 0) {
                fails.push_back(fmt("projection beaten (unit vector)", i, 0.0));
                break;
            }
        }
    }

    return fails;
}

}  // namespace dqmat::testing
