#include "dqmat/graphs.hpp"

#include <cmath>

#include "dqmat/errors.hpp"

namespace dqmat {

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw Error("Graph: self-loop");
    if (i >= n || j >= n) throw DimensionMismatch("Graph: vertex out of range");
    if (i > j) std::swap(i, j);
    edges.insert({i, j});
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [i, j] : edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

Graph circle_graph(std::size_t n) {
    if (n < 3) throw Error("circle_graph: need n >= 3");
    Graph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph random_graph(std::size_t n, double sparsity, Rng& rng) {
    if (n < 3) throw Error("random_graph: need n >= 3");
    if (sparsity <= 0.0 || sparsity > 1.0) throw InvalidSparsity("random_graph: sparsity out of (0, 1]");
    const auto target = static_cast<std::size_t>(
        std::ceil(sparsity * static_cast<double>(n) * static_cast<double>(n) / 2.0));
    if (target > n * (n - 1) / 2)
        throw InvalidSparsity("random_graph: requested edges exceed n(n-1)/2");
    Graph g;
    g.n = n;
    while (g.edges.size() < target) {
        const auto i = static_cast<std::size_t>(rng.uniform_index(n));
        const auto j = static_cast<std::size_t>(rng.uniform_index(n));
        if (i == j) continue;
        g.add_edge(std::min(i, j), std::max(i, j));
    }
    return g;
}

LaplacianBundle laplacian(const Graph& g, const DQVector& poses) {
    if (poses.size() != g.n) throw DimensionMismatch("laplacian: pose vector length");
    for (const auto& q : poses.entries())
        if (!q.is_unit()) throw NotUnitPose("laplacian: pose entry is not a unit dual quaternion");

    DQMatrix A(g.n, g.n);
    for (const auto& [i, j] : g.edges) {
        A.at(i, j) = dq_conj(poses[i]) * poses[j];
        A.at(j, i) = dq_conj(A.at(i, j));
    }
    const auto deg = g.degrees();
    std::vector<double> D(deg.begin(), deg.end());
    DQMatrix L(g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) L.at(i, j) = -A.at(i, j);
        L.at(i, i) = DualQuaternion{{D[i], 0, 0, 0}, Quaternion::zero()};
    }
    return {std::move(L), std::move(D), std::move(A)};
}

std::pair<double, double> spectrum_errors(const DQMatrix& L, const SpectrumResult& spec) {
    double e_lambda = 0.0;
    DQMatrix sum = DQMatrix::zero(L.rows(), L.cols());
    for (const auto& pair : spec.pairs) {
        const DQVector lu = mat_vec(L, pair.vector);
        double s = 0.0;
        for (std::size_t i = 0; i < lu.size(); ++i) {
            const DualQuaternion d = lu[i] - pair.vector[i] * pair.value;
            s += q_norm_sq(d.st) + q_norm_sq(d.du);
        }
        e_lambda += std::sqrt(s);
        sum = sum + rank_one(pair.value, pair.vector);
    }
    if (!spec.pairs.empty()) e_lambda /= static_cast<double>(spec.pairs.size());
    const double e_L = mat_normFR(L - sum) / mat_normFR(L);
    return {e_lambda, e_L};
}

}  // namespace dqmat
