#include "dqmat/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dqmat/errors.hpp"
#include "json.hpp"

namespace dqmat {

namespace {

using nlohmann::json;

std::array<double, 8> to_reals(const DualQuaternion& q) {
    return {q.st.w, q.st.x, q.st.y, q.st.z, q.du.w, q.du.x, q.du.y, q.du.z};
}

DualQuaternion from_reals(const std::array<double, 8>& r) {
    return {{r[0], r[1], r[2], r[3]}, {r[4], r[5], r[6], r[7]}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void dump_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

std::array<double, 8> parse_entry(const json& e, const std::string& path) {
    if (!e.is_array() || e.size() != 8)
        throw ParseError(path + ": entry is not an array of 8 reals");
    std::array<double, 8> r{};
    for (std::size_t c = 0; c < 8; ++c) {
        if (!e[c].is_number()) throw ParseError(path + ": non-numeric component");
        r[c] = e[c].get<double>();
    }
    return r;
}

}  // namespace

void write_matrix_json(const std::string& path, const DQMatrix& Q) {
    json entries = json::array();
    for (const auto& q : Q.entries()) entries.push_back(to_reals(q));
    dump_json(path, json{{"n", Q.rows()}, {"m", Q.cols()}, {"entries", std::move(entries)}});
}

DQMatrix read_matrix_json(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("n") || !j.contains("m") || !j.contains("entries"))
        throw ParseError(path + ": missing n/m/entries");
    const auto n = j["n"].get<std::size_t>();
    const auto m = j["m"].get<std::size_t>();
    if (n == 0 || m == 0 || !j["entries"].is_array() || j["entries"].size() != n * m)
        throw ParseError(path + ": entries length does not match n*m");
    DQMatrix Q(n, m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < m; ++jj)
            Q.at(i, jj) = from_reals(parse_entry(j["entries"][k++], path));
    return Q;
}

void write_vector_csv(const std::string& path, const DQVector& x) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    char buf[32];
    for (const auto& q : x.entries()) {
        const auto r = to_reals(q);
        for (std::size_t c = 0; c < 8; ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", r[c]);
            out << buf << (c + 1 < 8 ? "," : "\n");
        }
    }
}

DQVector read_vector_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::vector<DualQuaternion> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 8> r{};
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= 8) throw ParseError(path + ": more than 8 columns");
            char* end = nullptr;
            r[c] = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str()) throw ParseError(path + ": non-numeric cell");
            ++c;
        }
        if (c != 8) throw ParseError(path + ": expected 8 columns");
        entries.push_back(from_reals(r));
    }
    if (entries.empty()) throw ParseError(path + ": empty vector file");
    return DQVector(std::move(entries));
}

void write_edges_csv(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    for (const auto& [i, j] : g.edges) out << i << "," << j << "\n";
}

Graph read_edges_csv(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Graph g;
    g.n = n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t i = 0, j = 0;
        if (std::sscanf(line.c_str(), "%zu,%zu", &i, &j) != 2)
            throw ParseError(path + ": bad edge line: " + line);
        g.add_edge(i, j);
    }
    return g;
}

void write_problem_json(const std::string& path, const PoseGraph& p) {
    json arcs = json::array();
    json meas = json::array();
    for (std::size_t k = 0; k < p.arcs.size(); ++k) {
        arcs.push_back({p.arcs[k].first, p.arcs[k].second});
        meas.push_back(to_reals(p.measurements[k]));
    }
    dump_json(path, json{{"n", p.n}, {"arcs", std::move(arcs)}, {"measurements", std::move(meas)}});
}

PoseGraph read_problem_json(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("n") || !j.contains("arcs") || !j.contains("measurements"))
        throw ParseError(path + ": missing n/arcs/measurements");
    PoseGraph p;
    p.n = j["n"].get<std::size_t>();
    const auto& arcs = j["arcs"];
    const auto& meas = j["measurements"];
    if (!arcs.is_array() || !meas.is_array() || arcs.size() != meas.size())
        throw ParseError(path + ": arcs/measurements mismatch");
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (!arcs[k].is_array() || arcs[k].size() != 2)
            throw ParseError(path + ": bad arc");
        const auto i = arcs[k][0].get<std::size_t>();
        const auto jj = arcs[k][1].get<std::size_t>();
        if (i == jj || i >= p.n || jj >= p.n) throw ParseError(path + ": arc out of range");
        p.arcs.emplace_back(i, jj);
        p.measurements.push_back(from_reals(parse_entry(meas[k], path)));
    }
    return p;
}

}  // namespace dqmat
