#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dqmat/dual_number.hpp"
#include "dqmat/matrix.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

struct PowerConfig {
    int max_iters = 5000;
    double tol = 1e-8;           // delta in the stopping test ||y - v*lambda||_2R <= delta ||Q||_FR
    std::uint64_t seed = 0;
    std::optional<DQVector> init{};  // starting vector; random unit vector when absent
    bool record_trace = true;
    bool check_hermitian = true;
};

struct TracePoint {
    int iter;
    double residual_2R;
    DualNumber value;
};

/// Dominant eigenpair estimate with its convergence history.
///
/// `converged == false` is a soft failure: the pair is the last iterate and
/// may still have an accurate standard part (general dominant eigenvalues
/// can have non-convergent dual parts).
struct EigenPair {
    DualNumber value{};
    DQVector vector = DQVector(1);
    int iters = 0;
    double residual_2R = 0.0;
    bool converged = false;
    std::vector<TracePoint> trace{};
};

struct SpectrumResult {
    std::vector<EigenPair> pairs{};   // descending by the total order
    std::size_t n = 0;                // matrix dimension
    double deflation_residual = 0.0;  // ||Q_{k+1,st}||_F at termination
    bool all_converged = true;

    /// All n eigenvalues: the computed appreciable ones padded with the
    /// zeros implied by a negligible deflation residual, sorted descending.
    std::vector<DualNumber> eigenvalues_padded() const;
};

/// Power method for the dominant eigenpair of a dual quaternion Hermitian
/// matrix: y = Q v, lambda = v* y, v <- y/||y||_2, stopping when
/// ||y - v lambda||_2R <= tol * ||Q||_FR.
EigenPair power_method(const DQMatrix& Q, const PowerConfig& cfg = {});

/// Given a unit eigenvector v_st of Q_st, recover the dual parts:
/// lambda_I = v_st* Q_I v_st and v_I from the constrained linear system
///   (Q_st - lambda_st I) v_I = lambda_I v_st - Q_I v_st,  sc(v_I* v_st) = 0,
/// solved by minimum-norm least squares in the 4n-real embedding.
/// Returns the full eigenvalue and eigenvector (v_st, v_I).
std::pair<DualNumber, DQVector> recover_dual_part(const DQMatrix& Q,
                                                  const std::vector<Quaternion>& v_st);

/// All appreciable eigenvalues by repeated power method and deflation
/// Q_{k+1} = Q_k - lambda_k u_k u_k*, stopping when ||Q_{k+1,st}||_F <= gamma
/// or n pairs were found.  gamma < 0 selects the default 1e-6 ||Q_st||_F.
SpectrumResult all_eigenpairs(const DQMatrix& Q, const PowerConfig& cfg = {}, double gamma = -1.0);

/// Best rank-one approximation argmin ||Q - lambda u u*||_F^2: the dominant
/// eigenpair.
std::pair<DualNumber, DQVector> best_rank_one(const DQMatrix& Q, const PowerConfig& cfg = {});

/// Singular values of a rectangular matrix via the eigenvalues of A*A.
/// Eigenvalues with standard part <= gamma are skipped.
std::vector<DualNumber> singular_values(const DQMatrix& A, const PowerConfig& cfg = {},
                                        double gamma = -1.0);

/// Writes a trace as CSV with columns iter,residual_2R,lambda_st,lambda_du.
void write_trace_csv(const std::string& path, const std::vector<TracePoint>& trace);

}  // namespace dqmat
