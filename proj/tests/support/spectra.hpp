#pragma once

// Helpers for constructing matrices with known spectra and fitting
// convergence rates; shared by unit tests and the acceptance suite.

#include <cmath>
#include <cstddef>
#include <vector>

#include "dqmat/matrix.hpp"
#include "dqmat/projections.hpp"
#include "dqmat/random.hpp"
#include "dqmat/vector.hpp"

namespace dqmat::testing {

/// Gram-Schmidt over the dual quaternion right-module: k orthonormal
/// n-vectors from random starts.
inline std::vector<DQVector> orthonormal_set(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<DQVector> basis;
    basis.reserve(k);
    while (basis.size() < k) {
        DQVector v = random_vec(rng, n);
        for (const auto& u : basis) {
            const DualQuaternion coeff = inner(u, v);
            for (std::size_t i = 0; i < n; ++i) v[i] = v[i] - u[i] * coeff;
        }
        if (vec_norm2R(v) < 1e-6) continue;  // re-draw near-dependent starts
        basis.push_back(project_unit_vec(v));
    }
    return basis;
}

/// Hermitian matrix sum lambda_i u_i u_i* with a prescribed spectrum over a
/// random orthonormal set.
inline DQMatrix hermitian_from_spectrum(Rng& rng, std::size_t n,
                                        const std::vector<DualNumber>& lambdas,
                                        std::vector<DQVector>* basis_out = nullptr) {
    const auto basis = orthonormal_set(rng, n, lambdas.size());
    DQMatrix Q = DQMatrix::zero(n, n);
    for (std::size_t i = 0; i < lambdas.size(); ++i) Q = Q + rank_one(lambdas[i], basis[i]);
    if (basis_out) *basis_out = basis;
    return Q;
}

/// Least-squares slope of log(err) per iteration, restricted to errors in
/// (lo, hi).  Returns false when fewer than min_pts samples qualify.
inline bool fit_log_slope(const std::vector<double>& errs, double lo, double hi, double* slope,
                          int min_pts = 5) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t k = 0; k < errs.size(); ++k) {
        if (!(errs[k] > lo) || !(errs[k] < hi)) continue;
        const double x = static_cast<double>(k);
        const double y = std::log(errs[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < min_pts) return false;
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) return false;
    *slope = (m * sxy - sx * sy) / denom;
    return true;
}

}  // namespace dqmat::testing
