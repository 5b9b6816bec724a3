#include "dqmat/slam.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "dqmat/errors.hpp"
#include "dqmat/graphs.hpp"
#include "dqmat/projections.hpp"

namespace dqmat {

PoseGraph build_problem(const DQVector& x_true,
                        const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    for (const auto& q : x_true.entries())
        if (!q.is_unit(1e-8)) throw NotUnitPose("build_problem: pose is not a unit dual quaternion");
    PoseGraph p;
    p.n = x_true.size();
    p.arcs = arcs;
    p.measurements.reserve(arcs.size());
    for (const auto& [i, j] : arcs) {
        if (i == j || i >= p.n || j >= p.n) throw DimensionMismatch("build_problem: bad arc");
        p.measurements.push_back(dq_conj(x_true[i]) * x_true[j]);
    }
    return p;
}

std::pair<PoseGraph, double> add_noise(const PoseGraph& problem, double level, Rng& rng) {
    if (level < 0.0) throw Error("add_noise: negative level");
    if (level == 0.0 || problem.arcs.empty()) return {problem, 0.0};

    std::vector<DualQuaternion> noise(problem.measurements.size());
    double noise_sq = 0.0, meas_sq = 0.0;
    for (std::size_t k = 0; k < noise.size(); ++k) {
        noise[k] = random_dq(rng);
        noise_sq += q_norm_sq(noise[k].st) + q_norm_sq(noise[k].du);
        meas_sq += q_norm_sq(problem.measurements[k].st) + q_norm_sq(problem.measurements[k].du);
    }
    const double scale = level * std::sqrt(meas_sq) / std::sqrt(noise_sq);
    PoseGraph noisy = problem;
    double realized_sq = 0.0;
    for (std::size_t k = 0; k < noise.size(); ++k) {
        const DualQuaternion d = scale * noise[k];
        noisy.measurements[k] = noisy.measurements[k] + d;
        realized_sq += q_norm_sq(d.st) + q_norm_sq(d.du);
    }
    return {std::move(noisy), std::sqrt(realized_sq / meas_sq)};
}

namespace {

struct ArcIndex {
    std::vector<int> slot;  // arc (i,j) -> measurement index, -1 if unobserved
    std::size_t n;
    explicit ArcIndex(const PoseGraph& p) : slot(p.n * p.n, -1), n(p.n) {
        for (std::size_t k = 0; k < p.arcs.size(); ++k)
            slot[p.arcs[k].first * n + p.arcs[k].second] = static_cast<int>(k);
    }
    int at(std::size_t i, std::size_t j) const { return slot[i * n + j]; }
};

}  // namespace

DQMatrix update_X1(const PoseGraph& problem, const DQMatrix& X2, double rho, bool literal) {
    if (X2.rows() != problem.n || X2.cols() != problem.n)
        throw DimensionMismatch("update_X1: X2 shape");
    if (rho <= 0.0) throw Error("update_X1: rho must be positive");
    const ArcIndex idx(problem);
    DQMatrix X1(problem.n, problem.n);
    for (std::size_t i = 0; i < problem.n; ++i) X1.at(i, i) = DualQuaternion::one();

    if (literal) {
        for (std::size_t i = 0; i < problem.n; ++i)
            for (std::size_t j = 0; j < problem.n; ++j) {
                if (i == j) continue;
                const int ij = idx.at(i, j), ji = idx.at(j, i);
                DualQuaternion data = rho * (X2.at(i, j) + X2.at(j, i));
                double denom = 2.0 * rho;
                if (ij >= 0) { data = data + problem.measurements[ij]; denom += 1.0; }
                if (ji >= 0) { data = data + problem.measurements[ji]; denom += 1.0; }
                X1.at(i, j) = project_unit_dq((1.0 / denom) * data);
            }
        return X1;
    }

    // Hermitian form: everything expressed in the (i, j) orientation, then
    // mirrored by conjugation.
    for (std::size_t i = 0; i < problem.n; ++i)
        for (std::size_t j = i + 1; j < problem.n; ++j) {
            const int ij = idx.at(i, j), ji = idx.at(j, i);
            DualQuaternion data = rho * (X2.at(i, j) + dq_conj(X2.at(j, i)));
            double denom = 2.0 * rho;
            if (ij >= 0) { data = data + problem.measurements[ij]; denom += 1.0; }
            if (ji >= 0) { data = data + dq_conj(problem.measurements[ji]); denom += 1.0; }
            X1.at(i, j) = project_unit_dq((1.0 / denom) * data);
            X1.at(j, i) = dq_conj(X1.at(i, j));
        }
    return X1;
}

std::tuple<DQMatrix, DualNumber, DQVector> update_X2(const DQMatrix& X1, const PowerConfig& cfg) {
    auto [lambda, u] = best_rank_one(X1, cfg);
    return {rank_one(lambda, u), lambda, u};
}

double completion_misfit(const PoseGraph& problem, const DQVector& x) {
    double f = 0.0;
    for (std::size_t k = 0; k < problem.arcs.size(); ++k) {
        const auto [i, j] = problem.arcs[k];
        const DualQuaternion r = x[i] * dq_conj(x[j]) - problem.measurements[k];
        f += 0.5 * (q_norm_sq(r.st) + q_norm_sq(r.du));
    }
    return f;
}

namespace {

// Adjoints of left/right dual quaternion multiplication under the 8-real
// inner product; the dual part only pairs standard-against-standard.
DualQuaternion adj_right(const DualQuaternion& d, const DualQuaternion& b) {
    return {b.st * q_conj(d.st) + b.du * q_conj(d.du), b.du * q_conj(d.st)};
}

DualQuaternion adj_left(const DualQuaternion& q, const DualQuaternion& b) {
    return {q_conj(q.st) * b.st + q_conj(q.du) * b.du, q_conj(q.st) * b.du};
}

DQVector misfit_gradient(const PoseGraph& problem, const DQVector& x) {
    DQVector g(x.size());
    for (std::size_t k = 0; k < problem.arcs.size(); ++k) {
        const auto [i, j] = problem.arcs[k];
        const DualQuaternion xj_conj = dq_conj(x[j]);
        const DualQuaternion r = x[i] * xj_conj - problem.measurements[k];
        g[i] = g[i] + adj_right(xj_conj, r);
        g[j] = g[j] + dq_conj(adj_left(x[i], r));
    }
    return g;
}

/// Projects g onto the tangent space of the unit set at unit x: removes the
/// components along the constraint normals (x_st, 0) and (x_du, x_st).
DualQuaternion tangent_part(const DualQuaternion& x, const DualQuaternion& g) {
    const double a = q_dot(g.st, x.st);
    const double b = (q_dot(g.st, x.du) + q_dot(g.du, x.st)) / (1.0 + q_norm_sq(x.du));
    return {g.st - a * x.st - b * x.du, g.du - b * x.st};
}

}  // namespace

DQVector refine_completion(const PoseGraph& problem, DQVector x, int max_iters, int* iters_out) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = project_unit_dq(x[i]);
    double f = completion_misfit(problem, x);
    double step = 0.25;
    int accepted = 0;
    for (int it = 0; it < max_iters; ++it) {
        DQVector g = misfit_gradient(problem, x);
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = tangent_part(x[i], g[i]);
        const double g_sq = vec_norm2R(g) * vec_norm2R(g);
        if (g_sq <= 1e-24 * (1.0 + f * f)) break;
        step = std::min(std::max(step, 1e-6), 4.0);
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            DQVector trial(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                trial[i] = project_unit_dq(x[i] - step * g[i]);
            const double ft = completion_misfit(problem, trial);
            if (ft <= f - 1e-4 * step * g_sq) {
                x = std::move(trial);
                f = ft;
                step *= 1.5;
                moved = true;
                ++accepted;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    if (iters_out) *iters_out = accepted;
    return x;
}

SlamResult solve(const PoseGraph& problem, const SlamConfig& cfg) {
    if (problem.n == 0) throw DimensionMismatch("solve: empty problem");
    if (cfg.rho0 <= 0.0 || cfg.rho1 <= 1.0 || cfg.beta <= 0.0 || cfg.k_max < 1)
        throw Error("solve: invalid config");

    Rng rng(cfg.seed);
    DQVector u = random_unit_vec(rng, problem.n);
    DQMatrix X2 = rank_one({1.0, 0.0}, u);
    DQMatrix X1 = X2;
    DualNumber lambda{1.0, 0.0};
    double rho = cfg.rho0;
    PowerConfig pcfg = cfg.power_cfg;

    SlamResult result{std::move(X1), std::move(X2), lambda, u, u, 0, false, {}};
    for (int k = 1; k <= cfg.k_max; ++k) {
        result.X1 = update_X1(problem, result.X2, rho, cfg.literal_x1);
        pcfg.init = result.u;  // warm start
        std::tie(result.X2, result.lambda, result.u) = update_X2(result.X1, pcfg);
        rho *= cfg.rho1;
        const double gap = mat_normFR(result.X1 - result.X2);
        result.gap_trace.emplace_back(k, gap);
        result.iters = k;
        if (gap <= cfg.beta) {
            result.converged = true;
            break;
        }
    }
    if (result.lambda.st <= 0.0)
        throw NonPositiveLambda("solve: rank-one factor has non-positive eigenvalue");
    result.x = result.u * dn_sqrt(result.lambda);

    if (cfg.polish) {
        const DQVector refined = refine_completion(problem, result.x, cfg.polish_max_iters);
        result.u = project_unit_vec(refined);
        const DualNumber norm = vec_norm2(refined);
        result.lambda = norm * norm;
        result.x = result.u * dn_sqrt(result.lambda);
        result.X2 = rank_one(result.lambda, result.u);
        result.X1 = result.X2;
    }
    return result;
}

DQMatrix measurement_matrix(const DQVector& x_true) {
    const std::size_t n = x_true.size();
    DQMatrix Q0(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Q0.at(i, j) = dq_conj(x_true[i]) * x_true[j];
    return Q0;
}

namespace {

/// Right-multiplies by the (conjugated) normalized entry at index i.
DQVector gauge_align(const DQVector& w, std::size_t i, bool literal) {
    const DualQuaternion g = project_unit_dq(w[i]);
    return w * (literal ? g : dq_conj(g));
}

}  // namespace

std::pair<double, double> slam_errors(const DQVector& x_true, const SlamResult& result,
                                      const DQMatrix& Q0, bool literal_gauge) {
    const double e_Q = mat_normFR(Q0 - rank_one(result.lambda, result.u)) / mat_normFR(Q0);

    // The completed rank-one factor approximates the conjugate pose vector
    // [conj(q_1), ..., conj(q_n)] up to a right unit factor.
    const DQVector x_hat = vec_conj(x_true);
    std::size_t imax = 0;
    for (std::size_t i = 1; i < x_hat.size(); ++i)
        if (dq_norm2R(x_hat[i]) > dq_norm2R(x_hat[imax])) imax = i;
    const DQVector xr = gauge_align(x_hat, imax, literal_gauge);
    const DQVector yr = gauge_align(result.x, imax, literal_gauge);
    const double e_x = vec_norm2R(yr - xr) / vec_norm2R(xr);
    return {e_x, e_Q};
}

std::vector<std::pair<std::size_t, std::size_t>> circle_arcs(std::size_t n) {
    const Graph g = circle_graph(n);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& [i, j] : g.edges) {
        arcs.emplace_back(i, j);
        arcs.emplace_back(j, i);
    }
    return arcs;
}

std::vector<std::pair<std::size_t, std::size_t>> random_arcs(std::size_t n, double ratio, Rng& rng) {
    if (n < 2) throw DimensionMismatch("random_arcs: need n >= 2");
    if (ratio <= 0.0 || ratio > 1.0) throw InvalidSparsity("random_arcs: ratio out of (0, 1]");
    const auto target = static_cast<std::size_t>(
        std::ceil(ratio * static_cast<double>(n) * static_cast<double>(n)));
    if (target > n * (n - 1)) throw InvalidSparsity("random_arcs: requested arcs exceed n(n-1)");
    std::set<std::pair<std::size_t, std::size_t>> arcs;
    while (arcs.size() < target) {
        const auto i = static_cast<std::size_t>(rng.uniform_index(n));
        const auto j = static_cast<std::size_t>(rng.uniform_index(n));
        if (i != j) arcs.insert({i, j});
    }
    return {arcs.begin(), arcs.end()};
}

void write_gap_trace_csv(const std::string& path,
                         const std::vector<std::pair<int, double>>& trace) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open gap trace file: " + path);
    out << "iter,gap_FR\n";
    char buf[64];
    for (const auto& [k, gap] : trace) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g\n", k, gap);
        out << buf;
    }
}

}  // namespace dqmat
