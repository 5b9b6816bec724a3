#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dqmat/dual_quaternion.hpp"
#include "dqmat/errors.hpp"

namespace dqmat {

/// Threshold below which a standard part counts as zero when choosing the
/// appreciable/infinitesimal branch of the two-branch norm definitions.
inline constexpr double kAppreciableTol = 1e-12;

/// Dense dual quaternion column vector, n >= 1.
class DQVector {
public:
    explicit DQVector(std::size_t n) : entries_(n) {
        if (n == 0) throw DimensionMismatch("DQVector: length must be >= 1");
    }
    explicit DQVector(std::vector<DualQuaternion> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw DimensionMismatch("DQVector: length must be >= 1");
    }

    std::size_t size() const { return entries_.size(); }
    const DualQuaternion& operator[](std::size_t i) const { return entries_[i]; }
    DualQuaternion& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<DualQuaternion>& entries() const { return entries_; }

    static DQVector zero(std::size_t n) { return DQVector(n); }
    static DQVector unit(std::size_t n, std::size_t i) {
        DQVector e(n);
        e[i] = DualQuaternion::one();
        return e;
    }

    /// Standard-part array is not identically zero.
    bool appreciable() const {
        for (const auto& q : entries_)
            if (!q.st.is_zero()) return true;
        return false;
    }

    friend DQVector operator+(const DQVector& a, const DQVector& b) {
        check_same_size(a, b);
        DQVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend DQVector operator-(const DQVector& a, const DQVector& b) {
        check_same_size(a, b);
        DQVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    /// Entrywise right-multiplication by a dual quaternion scalar.
    friend DQVector operator*(const DQVector& a, const DualQuaternion& s) {
        DQVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
        return r;
    }
    friend DQVector operator*(const DQVector& a, DualNumber s) {
        DQVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
        return r;
    }

    static void check_same_size(const DQVector& a, const DQVector& b) {
        if (a.size() != b.size()) throw DimensionMismatch("DQVector: length mismatch");
    }

private:
    std::vector<DualQuaternion> entries_;
};

inline DQVector vec_conj(const DQVector& x) {
    DQVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = dq_conj(x[i]);
    return r;
}

/// 2-norm as a dual number.  Appreciable branch: sqrt(sum |x_i|^2) in dual
/// arithmetic; infinitesimal branch: ||x_I||_2 eps.
inline DualNumber vec_norm2(const DQVector& x) {
    double st_sq = 0.0, cross = 0.0, du_sq = 0.0;
    for (const auto& q : x.entries()) {
        st_sq += q_norm_sq(q.st);
        cross += q_dot(q.st, q.du);
        du_sq += q_norm_sq(q.du);
    }
    const double st_norm = std::sqrt(st_sq);
    if (st_norm > kAppreciableTol) {
        // sum |x_i|^2 = (||x_st||^2, 2 sum <st_i, du_i>); take dn_sqrt.
        return {st_norm, cross / st_norm};
    }
    return {0.0, std::sqrt(du_sq)};
}

/// Euclidean norm over all 8n real components.
inline double vec_norm2R(const DQVector& x) {
    double s = 0.0;
    for (const auto& q : x.entries()) s += q_norm_sq(q.st) + q_norm_sq(q.du);
    return std::sqrt(s);
}

/// x* y = sum conj(x_i) y_i.
inline DualQuaternion inner(const DQVector& x, const DQVector& y) {
    DQVector::check_same_size(x, y);
    DualQuaternion acc = DualQuaternion::zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + dq_conj(x[i]) * y[i];
    return acc;
}

}  // namespace dqmat
