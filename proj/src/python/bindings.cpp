#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>

#include "dqmat/eigensolver.hpp"
#include "dqmat/errors.hpp"
#include "dqmat/graphs.hpp"
#include "dqmat/io.hpp"
#include "dqmat/projections.hpp"
#include "dqmat/slam.hpp"

namespace py = pybind11;
using namespace dqmat;

namespace {

std::array<double, 8> dq_tuple(const DualQuaternion& q) {
    return {q.st.w, q.st.x, q.st.y, q.st.z, q.du.w, q.du.x, q.du.y, q.du.z};
}

DualQuaternion dq_from(const std::array<double, 8>& r) {
    return {{r[0], r[1], r[2], r[3]}, {r[4], r[5], r[6], r[7]}};
}

DQVector vec_from(const std::vector<std::array<double, 8>>& rows) {
    std::vector<DualQuaternion> entries;
    entries.reserve(rows.size());
    for (const auto& r : rows) entries.push_back(dq_from(r));
    return DQVector(std::move(entries));
}

std::vector<std::array<double, 8>> vec_tuples(const DQVector& x) {
    std::vector<std::array<double, 8>> out;
    out.reserve(x.size());
    for (const auto& q : x.entries()) out.push_back(dq_tuple(q));
    return out;
}

DQMatrix mat_from(const std::vector<std::vector<std::array<double, 8>>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix: empty");
    DQMatrix Q(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != Q.cols()) throw DimensionMismatch("matrix: ragged rows");
        for (std::size_t j = 0; j < Q.cols(); ++j) Q.at(i, j) = dq_from(rows[i][j]);
    }
    return Q;
}

std::vector<std::vector<std::array<double, 8>>> mat_tuples(const DQMatrix& Q) {
    std::vector<std::vector<std::array<double, 8>>> out(Q.rows());
    for (std::size_t i = 0; i < Q.rows(); ++i) {
        out[i].reserve(Q.cols());
        for (std::size_t j = 0; j < Q.cols(); ++j) out[i].push_back(dq_tuple(Q.at(i, j)));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_dqmat, m) {
    m.doc() = "dual quaternion linear algebra, power-method eigensolver, and SLAM";

    py::register_exception<Error>(m, "DqmatError");

    py::class_<DualNumber>(m, "DualNumber")
        .def(py::init<double, double>(), py::arg("st"), py::arg("du") = 0.0)
        .def_readonly("st", &DualNumber::st)
        .def_readonly("du", &DualNumber::du)
        .def("appreciable", &DualNumber::appreciable)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self > py::self)
        .def("__abs__", &dn_abs)
        .def("sqrt", &dn_sqrt)
        .def("__repr__", [](DualNumber a) {
            return "DualNumber(" + std::to_string(a.st) + ", " + std::to_string(a.du) + ")";
        });
    m.def("dn_cmp", &dn_cmp);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>())
        .def_readonly("w", &Quaternion::w)
        .def_readonly("x", &Quaternion::x)
        .def_readonly("y", &Quaternion::y)
        .def_readonly("z", &Quaternion::z)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("conj", &q_conj)
        .def("norm", &q_norm)
        .def("sc", &q_sc);

    py::class_<DualQuaternion>(m, "DualQuaternion")
        .def(py::init<const Quaternion&, const Quaternion&>())
        .def(py::init([](const std::array<double, 8>& r) { return dq_from(r); }))
        .def_readonly("st", &DualQuaternion::st)
        .def_readonly("du", &DualQuaternion::du)
        .def("appreciable", &DualQuaternion::appreciable)
        .def("is_unit", &DualQuaternion::is_unit, py::arg("tol") = 1e-9)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("conj", &dq_conj)
        .def("magnitude", &dq_magnitude)
        .def("mag2star", &dq_mag2star)
        .def("div_dn", &dq_div_dn)
        .def("to_tuple", &dq_tuple);

    m.def("project_unit_dq", &project_unit_dq);
    m.def("random_unit_dq",
          [](std::uint64_t seed) {
              Rng rng(seed);
              return random_unit_dq(rng);
          },
          py::arg("seed"));
    m.def("project_unit_vec",
          [](const std::vector<std::array<double, 8>>& v) {
              return vec_tuples(project_unit_vec(vec_from(v)));
          });
    m.def("random_unit_vec",
          [](std::uint64_t seed, std::size_t n) {
              Rng rng(seed);
              return vec_tuples(random_unit_vec(rng, n));
          },
          py::arg("seed"), py::arg("n"));

    m.def("vec_norm2", [](const std::vector<std::array<double, 8>>& v) {
        return vec_norm2(vec_from(v));
    });
    m.def("vec_norm2R", [](const std::vector<std::array<double, 8>>& v) {
        return vec_norm2R(vec_from(v));
    });
    m.def("mat_normF",
          [](const std::vector<std::vector<std::array<double, 8>>>& q) {
              return mat_normF(mat_from(q));
          });
    m.def("mat_normFR",
          [](const std::vector<std::vector<std::array<double, 8>>>& q) {
              return mat_normFR(mat_from(q));
          });
    m.def("mat_vec",
          [](const std::vector<std::vector<std::array<double, 8>>>& q,
             const std::vector<std::array<double, 8>>& x) {
              return vec_tuples(mat_vec(mat_from(q), vec_from(x)));
          });
    m.def("is_hermitian",
          [](const std::vector<std::vector<std::array<double, 8>>>& q, double tol) {
              return mat_from(q).is_hermitian(tol);
          },
          py::arg("matrix"), py::arg("tol") = 1e-10);

    py::class_<PowerConfig>(m, "PowerConfig")
        .def(py::init<>())
        .def_readwrite("max_iters", &PowerConfig::max_iters)
        .def_readwrite("tol", &PowerConfig::tol)
        .def_readwrite("seed", &PowerConfig::seed)
        .def_readwrite("record_trace", &PowerConfig::record_trace);

    py::class_<EigenPair>(m, "EigenPair")
        .def_readonly("value", &EigenPair::value)
        .def_readonly("iters", &EigenPair::iters)
        .def_readonly("residual_2R", &EigenPair::residual_2R)
        .def_readonly("converged", &EigenPair::converged)
        .def_property_readonly("vector",
                               [](const EigenPair& p) { return vec_tuples(p.vector); })
        .def_property_readonly("trace", [](const EigenPair& p) {
            std::vector<std::tuple<int, double, double, double>> t;
            for (const auto& e : p.trace)
                t.emplace_back(e.iter, e.residual_2R, e.value.st, e.value.du);
            return t;
        });

    py::class_<SpectrumResult>(m, "SpectrumResult")
        .def_readonly("pairs", &SpectrumResult::pairs)
        .def_readonly("n", &SpectrumResult::n)
        .def_readonly("deflation_residual", &SpectrumResult::deflation_residual)
        .def_readonly("all_converged", &SpectrumResult::all_converged)
        .def("eigenvalues_padded", &SpectrumResult::eigenvalues_padded);

    m.def("power_method",
          [](const std::vector<std::vector<std::array<double, 8>>>& q, const PowerConfig& cfg) {
              return power_method(mat_from(q), cfg);
          },
          py::arg("matrix"), py::arg("config") = PowerConfig{});
    m.def("all_eigenpairs",
          [](const std::vector<std::vector<std::array<double, 8>>>& q, const PowerConfig& cfg,
             double gamma) { return all_eigenpairs(mat_from(q), cfg, gamma); },
          py::arg("matrix"), py::arg("config") = PowerConfig{}, py::arg("gamma") = -1.0);
    m.def("best_rank_one",
          [](const std::vector<std::vector<std::array<double, 8>>>& q, const PowerConfig& cfg) {
              auto [lambda, u] = best_rank_one(mat_from(q), cfg);
              return std::make_pair(lambda, vec_tuples(u));
          },
          py::arg("matrix"), py::arg("config") = PowerConfig{});
    m.def("singular_values",
          [](const std::vector<std::vector<std::array<double, 8>>>& a, const PowerConfig& cfg) {
              return singular_values(mat_from(a), cfg);
          },
          py::arg("matrix"), py::arg("config") = PowerConfig{});
    m.def("recover_dual_part",
          [](const std::vector<std::vector<std::array<double, 8>>>& q,
             const std::vector<std::array<double, 4>>& v_st) {
              std::vector<Quaternion> v(v_st.size());
              for (std::size_t i = 0; i < v_st.size(); ++i)
                  v[i] = {v_st[i][0], v_st[i][1], v_st[i][2], v_st[i][3]};
              auto [lambda, vec] = recover_dual_part(mat_from(q), v);
              return std::make_pair(lambda, vec_tuples(vec));
          },
          py::arg("matrix"), py::arg("v_st"));

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_property_readonly("edges", [](const Graph& g) {
            return std::vector<std::pair<std::size_t, std::size_t>>(g.edges.begin(),
                                                                    g.edges.end());
        });
    m.def("circle_graph", &circle_graph);
    m.def("random_graph", [](std::size_t n, double s, std::uint64_t seed) {
        Rng rng(seed);
        return random_graph(n, s, rng);
    });
    m.def("laplacian",
          [](const Graph& g, const std::vector<std::array<double, 8>>& poses) {
              const LaplacianBundle lb = laplacian(g, vec_from(poses));
              return py::make_tuple(mat_tuples(lb.L), lb.D, mat_tuples(lb.A));
          });
    m.def("spectrum_errors",
          [](const std::vector<std::vector<std::array<double, 8>>>& l, const SpectrumResult& s) {
              return spectrum_errors(mat_from(l), s);
          });

    py::class_<PoseGraph>(m, "PoseGraph")
        .def_readonly("n", &PoseGraph::n)
        .def_readonly("arcs", &PoseGraph::arcs)
        .def_property_readonly("measurements", [](const PoseGraph& p) {
            std::vector<std::array<double, 8>> out;
            for (const auto& q : p.measurements) out.push_back(dq_tuple(q));
            return out;
        });

    py::class_<SlamConfig>(m, "SlamConfig")
        .def(py::init<>())
        .def_readwrite("rho0", &SlamConfig::rho0)
        .def_readwrite("rho1", &SlamConfig::rho1)
        .def_readwrite("k_max", &SlamConfig::k_max)
        .def_readwrite("beta", &SlamConfig::beta)
        .def_readwrite("seed", &SlamConfig::seed)
        .def_readwrite("literal_x1", &SlamConfig::literal_x1);

    py::class_<SlamResult>(m, "SlamResult")
        .def_readonly("lambda_", &SlamResult::lambda)
        .def_readonly("iters", &SlamResult::iters)
        .def_readonly("converged", &SlamResult::converged)
        .def_readonly("gap_trace", &SlamResult::gap_trace)
        .def_property_readonly("u", [](const SlamResult& r) { return vec_tuples(r.u); })
        .def_property_readonly("x", [](const SlamResult& r) { return vec_tuples(r.x); });

    m.def("build_problem",
          [](const std::vector<std::array<double, 8>>& poses,
             const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
              return build_problem(vec_from(poses), arcs);
          });
    m.def("add_noise", [](const PoseGraph& p, double level, std::uint64_t seed) {
        Rng rng(seed);
        return add_noise(p, level, rng);
    });
    m.def("circle_arcs", &circle_arcs);
    m.def("random_arcs", [](std::size_t n, double ratio, std::uint64_t seed) {
        Rng rng(seed);
        return random_arcs(n, ratio, rng);
    });
    m.def("solve", &solve, py::arg("problem"), py::arg("config") = SlamConfig{});
    m.def("slam_errors",
          [](const std::vector<std::array<double, 8>>& x_true, const SlamResult& result,
             const std::vector<std::vector<std::array<double, 8>>>& q0, bool literal_gauge) {
              return slam_errors(vec_from(x_true), result, mat_from(q0), literal_gauge);
          },
          py::arg("x_true"), py::arg("result"), py::arg("Q0"), py::arg("literal_gauge") = false);
    m.def("measurement_matrix", [](const std::vector<std::array<double, 8>>& poses) {
        return mat_tuples(measurement_matrix(vec_from(poses)));
    });

    m.def("read_matrix_json",
          [](const std::string& path) { return mat_tuples(read_matrix_json(path)); });
    m.def("write_matrix_json",
          [](const std::string& path, const std::vector<std::vector<std::array<double, 8>>>& q) {
              write_matrix_json(path, mat_from(q));
          });
    m.def("read_vector_csv",
          [](const std::string& path) { return vec_tuples(read_vector_csv(path)); });
    m.def("write_vector_csv",
          [](const std::string& path, const std::vector<std::array<double, 8>>& v) {
              write_vector_csv(path, vec_from(v));
          });
    m.def("read_problem_json", &read_problem_json);
    m.def("write_problem_json", &write_problem_json);
}
