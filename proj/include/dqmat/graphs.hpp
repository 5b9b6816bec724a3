#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "dqmat/eigensolver.hpp"
#include "dqmat/matrix.hpp"
#include "dqmat/random.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

/// Undirected simple graph: no self-loops, no duplicate edges.
struct Graph {
    std::size_t n = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges{};  // normalized i < j

    void add_edge(std::size_t i, std::size_t j);
    std::vector<std::size_t> degrees() const;
};

/// Laplacian L = D - A with A_ij = conj(q_i) q_j on edges.
struct LaplacianBundle {
    DQMatrix L;
    std::vector<double> D;  // vertex degrees
    DQMatrix A;
};

Graph circle_graph(std::size_t n);

/// Random graph with sparsity s = m/n^2: samples ceil(s n^2 / 2) distinct
/// unordered pairs (resampling collisions) and symmetrizes.
Graph random_graph(std::size_t n, double sparsity, Rng& rng);

LaplacianBundle laplacian(const Graph& g, const DQVector& poses);

/// e_lambda = mean ||L u_i - lambda_i u_i||_2R over computed pairs;
/// e_L = ||L - sum lambda_i u_i u_i*||_FR / ||L||_FR.
std::pair<double, double> spectrum_errors(const DQMatrix& L, const SpectrumResult& spec);

}  // namespace dqmat
