#pragma once

#include <string>

#include "dqmat/graphs.hpp"
#include "dqmat/matrix.hpp"
#include "dqmat/slam.hpp"
#include "dqmat/vector.hpp"

namespace dqmat {

// Serialization order of a dual quaternion is the 8 reals
// [w_st, x_st, y_st, z_st, w_du, x_du, y_du, z_du]; all file formats
// round-trip bit-exactly.

/// Matrix JSON: {"n": rows, "m": cols, "entries": [[8 reals] row-major]}.
void write_matrix_json(const std::string& path, const DQMatrix& Q);
DQMatrix read_matrix_json(const std::string& path);

/// Vector CSV: one row per entry, 8 columns.
void write_vector_csv(const std::string& path, const DQVector& x);
DQVector read_vector_csv(const std::string& path);

/// Edge-list CSV: one "i,j" line per undirected edge (0-based).
void write_edges_csv(const std::string& path, const Graph& g);
Graph read_edges_csv(const std::string& path, std::size_t n);

/// Problem JSON: {"n": int, "arcs": [[i, j]], "measurements": [[8 reals]]}.
void write_problem_json(const std::string& path, const PoseGraph& p);
PoseGraph read_problem_json(const std::string& path);

}  // namespace dqmat
