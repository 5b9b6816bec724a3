#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dqmat/dual_quaternion.hpp"
#include "dqmat/errors.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

/// Dense row-major dual quaternion matrix.
class DQMatrix {
public:
    DQMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("DQMatrix: empty shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const DualQuaternion& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    DualQuaternion& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const std::vector<DualQuaternion>& entries() const { return entries_; }

    static DQMatrix zero(std::size_t n, std::size_t m) { return DQMatrix(n, m); }
    static DQMatrix identity(std::size_t n) {
        DQMatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I.at(i, i) = DualQuaternion::one();
        return I;
    }

    bool appreciable() const {
        for (const auto& q : entries_)
            if (!q.st.is_zero()) return true;
        return false;
    }

    bool is_hermitian(double tol = 1e-10) const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (!dq_approx_eq(at(i, j), dq_conj(at(j, i)), tol)) return false;
        return true;
    }

    friend DQMatrix operator+(const DQMatrix& a, const DQMatrix& b) {
        check_same_shape(a, b);
        DQMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }
    friend DQMatrix operator-(const DQMatrix& a, const DQMatrix& b) {
        check_same_shape(a, b);
        DQMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }
    friend DQMatrix operator*(double s, const DQMatrix& a) {
        DQMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = s * a.entries_[k];
        return r;
    }

    static void check_same_shape(const DQMatrix& a, const DQMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("DQMatrix: shape mismatch");
    }

private:
    std::size_t rows_, cols_;
    std::vector<DualQuaternion> entries_;
};

inline DQMatrix mat_conj_transpose(const DQMatrix& Q) {
    DQMatrix r(Q.cols(), Q.rows());
    for (std::size_t i = 0; i < Q.rows(); ++i)
        for (std::size_t j = 0; j < Q.cols(); ++j) r.at(j, i) = dq_conj(Q.at(i, j));
    return r;
}

inline DQMatrix mat_sub(const DQMatrix& a, const DQMatrix& b) { return a - b; }

/// Explicit Hermitian symmetrization (Q + Q*)/2.
inline DQMatrix make_hermitian(const DQMatrix& Q) {
    if (!Q.square()) throw DimensionMismatch("make_hermitian: matrix must be square");
    DQMatrix r(Q.rows(), Q.cols());
    for (std::size_t i = 0; i < Q.rows(); ++i)
        for (std::size_t j = 0; j < Q.cols(); ++j)
            r.at(i, j) = 0.5 * (Q.at(i, j) + dq_conj(Q.at(j, i)));
    return r;
}

/// F-norm as a dual number: (||Q_st||_F, sc(tr(Q_st* Q_I))/||Q_st||_F) when
/// appreciable, otherwise ||Q_I||_F eps.
inline DualNumber mat_normF(const DQMatrix& Q) {
    double st_sq = 0.0, cross = 0.0, du_sq = 0.0;
    for (const auto& q : Q.entries()) {
        st_sq += q_norm_sq(q.st);
        cross += q_dot(q.st, q.du);
        du_sq += q_norm_sq(q.du);
    }
    const double st_norm = std::sqrt(st_sq);
    if (st_norm > kAppreciableTol) return {st_norm, cross / st_norm};
    return {0.0, std::sqrt(du_sq)};
}

/// F*-norm: (||Q_st||_F, ||Q_I||_F^2 / (2||Q_st||_F)) when appreciable.
inline DualNumber mat_normFstar(const DQMatrix& Q) {
    double st_sq = 0.0, du_sq = 0.0;
    for (const auto& q : Q.entries()) {
        st_sq += q_norm_sq(q.st);
        du_sq += q_norm_sq(q.du);
    }
    const double st_norm = std::sqrt(st_sq);
    if (st_norm > kAppreciableTol) return {st_norm, du_sq / (2.0 * st_norm)};
    return {0.0, std::sqrt(du_sq)};
}

/// Frobenius norm over all 8nm real components.
inline double mat_normFR(const DQMatrix& Q) {
    double s = 0.0;
    for (const auto& q : Q.entries()) s += q_norm_sq(q.st) + q_norm_sq(q.du);
    return std::sqrt(s);
}

inline double mat_normF_st(const DQMatrix& Q) {
    double s = 0.0;
    for (const auto& q : Q.entries()) s += q_norm_sq(q.st);
    return std::sqrt(s);
}

/// y = Q x.  Hot path of the power method; accumulates the truncated dual
/// product (p q)_st = p_st q_st, (p q)_I = p_st q_I + p_I q_st entrywise.
inline DQVector mat_vec(const DQMatrix& Q, const DQVector& x) {
    if (Q.cols() != x.size()) throw DimensionMismatch("mat_vec: shape mismatch");
    DQVector y(Q.rows());
    for (std::size_t i = 0; i < Q.rows(); ++i) {
        DualQuaternion acc = DualQuaternion::zero();
        const DualQuaternion* row = &Q.at(i, 0);
        for (std::size_t j = 0; j < Q.cols(); ++j) {
            const Quaternion& a = row[j].st;
            const Quaternion& b = row[j].du;
            const Quaternion& c = x[j].st;
            const Quaternion& d = x[j].du;
            acc.st = acc.st + a * c;
            acc.du = acc.du + a * d + b * c;
        }
        y[i] = acc;
    }
    return y;
}

inline DQMatrix mat_mul(const DQMatrix& A, const DQMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionMismatch("mat_mul: shape mismatch");
    DQMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const DualQuaternion& a = A.at(i, k);
            if (a.st.is_zero() && a.du.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C.at(i, j) = C.at(i, j) + a * B.at(k, j);
        }
    return C;
}

/// rank_one(lambda, u)_{ij} = u_i * lambda * conj(u_j); Hermitian for any
/// dual number lambda and vector u.
inline DQMatrix rank_one(DualNumber lambda, const DQVector& u) {
    DQMatrix R(u.size(), u.size());
    std::vector<DualQuaternion> lu(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) lu[i] = u[i] * lambda;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) R.at(i, j) = lu[i] * dq_conj(u[j]);
    return R;
}

/// x* Q x for Hermitian Q, reported as a dual number.  Throws NotScalar if
/// the vector parts exceed tol.
inline DualNumber quadratic_form(const DQVector& x, const DQMatrix& Q, double tol = 1e-9) {
    const DualQuaternion v = inner(x, mat_vec(Q, x));
    const double vec_mag = std::sqrt(v.st.x * v.st.x + v.st.y * v.st.y + v.st.z * v.st.z +
                                     v.du.x * v.du.x + v.du.y * v.du.y + v.du.z * v.du.z);
    if (vec_mag > tol) throw NotScalar("quadratic_form: result has non-scalar parts");
    return {v.st.w, v.du.w};
}

}  // namespace dqmat
