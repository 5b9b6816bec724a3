#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "dqmat/eigensolver.hpp"
#include "dqmat/matrix.hpp"
#include "dqmat/random.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

/// Directed measurement graph: arc (i, j) carries the relative measurement
/// q_ij ~ conj(pose_i) * pose_j.  Measurements are aligned with arcs.
struct PoseGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs{};
    std::vector<DualQuaternion> measurements{};
};

struct SlamConfig {
    double rho0 = 0.01;
    double rho1 = 1.1;
    int k_max = 1000;
    double beta = 1e-5;
    PowerConfig power_cfg{.max_iters = 2000, .tol = 1e-10, .record_trace = false,
                          .check_hermitian = false};
    std::uint64_t seed = 0;
    /// Use the unsymmetrized update for X1 (no conjugation of the (j, i)
    /// data terms, every entry computed independently).
    bool literal_x1 = false;
    /// Polish the coordinate-descent output by projected gradient descent
    /// of the data misfit on the pose manifold.  The penalty schedule stops
    /// refining once rho is large; on noisy data the polish recovers the
    /// constrained least-squares optimum.
    bool polish = true;
    int polish_max_iters = 500;
};

struct SlamResult {
    DQMatrix X1;
    DQMatrix X2;
    DualNumber lambda{};
    DQVector u;
    DQVector x;  // rank-one factor sqrt(lambda) * u
    int iters = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> gap_trace{};  // (iter, ||X1-X2||_FR)
};

/// Noise-free measurements q_ij = conj(x_i) x_j for the given arcs.
PoseGraph build_problem(const DQVector& x_true,
                        const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

/// Additive i.i.d. Gaussian noise on all 8 components of every observed
/// measurement, scaled so the realized relative level
/// ||N_E||_FR / ||Q0_E||_FR over observed entries equals `level` exactly.
/// Returns the perturbed graph and the realized level.
std::pair<PoseGraph, double> add_noise(const PoseGraph& problem, double level, Rng& rng);

/// Closed-form X1 update: diagonal fixed to 1, off-diagonal entries projected
/// combinations of the observed measurements and the current X2.
DQMatrix update_X1(const PoseGraph& problem, const DQMatrix& X2, double rho,
                   bool literal = false);

/// X2 update: best rank-one approximation of X1.
std::tuple<DQMatrix, DualNumber, DQVector> update_X2(const DQMatrix& X1, const PowerConfig& cfg);

/// Two-block coordinate descent with increasing quadratic penalty, followed
/// by the optional pose-manifold polish.
SlamResult solve(const PoseGraph& problem, const SlamConfig& cfg = {});

/// Data misfit 1/2 sum_arcs ||x_i conj(x_j) - m_ij||^2 over all 8 real
/// components, for a completion vector x of unit dual quaternions.
double completion_misfit(const PoseGraph& problem, const DQVector& x);

/// Projected gradient descent of completion_misfit on the per-entry unit
/// manifold.  Returns the refined vector; iters_out (optional) receives the
/// accepted step count.
DQVector refine_completion(const PoseGraph& problem, DQVector x, int max_iters = 500,
                           int* iters_out = nullptr);

/// (e_x, e_Q) against the true poses and the noise-free full matrix Q0.
/// e_x compares the gauge-aligned rank-one factor with the gauge-aligned
/// conjugate pose vector; literal_gauge selects alignment without the
/// conjugation.
std::pair<double, double> slam_errors(const DQVector& x_true, const SlamResult& result,
                                      const DQMatrix& Q0, bool literal_gauge = false);

/// Full noise-free measurement matrix Q0 = (conj(x_i) x_j)_{ij}.
DQMatrix measurement_matrix(const DQVector& x_true);

/// Arcs of a circle SLAM instance: both orientations of each circle edge.
std::vector<std::pair<std::size_t, std::size_t>> circle_arcs(std::size_t n);

/// Arcs of a random SLAM instance: ceil(ratio * n^2) distinct directed arcs,
/// sampled uniformly (observation ratio = |arcs| / n^2).
std::vector<std::pair<std::size_t, std::size_t>> random_arcs(std::size_t n, double ratio, Rng& rng);

void write_gap_trace_csv(const std::string& path,
                         const std::vector<std::pair<int, double>>& trace);

}  // namespace dqmat
