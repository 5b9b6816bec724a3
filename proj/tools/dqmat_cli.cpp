// Command-line front end: eigensolvers and SLAM experiments on files.
//
// Exit codes: 0 ok, 2 input error, 3 precondition violated, 4 no convergence.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dqmat/eigensolver.hpp"
#include "dqmat/errors.hpp"
#include "dqmat/graphs.hpp"
#include "dqmat/io.hpp"
#include "dqmat/projections.hpp"
#include "dqmat/slam.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace dqmat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConvergence = 4;

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void print_dual(const char* label, DualNumber v) {
    std::printf("%s = %.10g %c %.10geps\n", label, v.st, v.du < 0 ? '-' : '+', std::abs(v.du));
}

struct EigOptions {
    std::string matrix_file;
    double tol = 1e-8;
    int max_iters = 5000;
    std::uint64_t seed = 0;
    std::string trace_out;
};

int run_eig(const EigOptions& opt) {
    const DQMatrix Q = read_matrix_json(opt.matrix_file);
    PowerConfig cfg;
    cfg.tol = opt.tol;
    cfg.max_iters = opt.max_iters;
    cfg.seed = opt.seed;
    const double t0 = now_s();
    const EigenPair pair = power_method(Q, cfg);
    const double elapsed = now_s() - t0;
    print_dual("lambda", pair.value);
    std::printf("iterations = %d\nresidual_2R = %.6e\ntime_s = %.4f\n", pair.iters,
                pair.residual_2R, elapsed);
    if (!opt.trace_out.empty()) write_trace_csv(opt.trace_out, pair.trace);
    if (!pair.converged) {
        std::fprintf(stderr, "no convergence within %d iterations (partial result above)\n",
                     cfg.max_iters);
        return kExitConvergence;
    }
    return kExitOk;
}

struct EigsAllOptions {
    std::string matrix_file;
    double tol = 1e-8;
    int max_iters = 5000;
    double gamma = -1.0;
    std::uint64_t seed = 0;
    std::string json_out;
};

int run_eigs_all(const EigsAllOptions& opt) {
    const DQMatrix Q = read_matrix_json(opt.matrix_file);
    PowerConfig cfg;
    cfg.tol = opt.tol;
    cfg.max_iters = opt.max_iters;
    cfg.seed = opt.seed;
    const double t0 = now_s();
    const SpectrumResult spec = all_eigenpairs(Q, cfg, opt.gamma);
    const double elapsed = now_s() - t0;

    // Table layout: eigenvalues on top, iteration counts below ("-" marks
    // the zero eigenvalues implied by the deflation stop).
    const auto vals = spec.eigenvalues_padded();
    std::printf("eigenvalues:");
    for (const auto& v : vals) std::printf("  %.4f%+.2geps", v.st, v.du);
    std::printf("\niterations: ");
    for (const auto& p : spec.pairs) std::printf("  %d", p.iters);
    for (std::size_t k = spec.pairs.size(); k < vals.size(); ++k) std::printf("  -");
    std::printf("\n");

    const auto [e_lambda, e_L] = spectrum_errors(Q, spec);
    const double per_eig = spec.pairs.empty() ? 0.0 : elapsed / double(spec.pairs.size());
    std::printf("e_lambda = %.6e\ne_L = %.6e\n", e_lambda, e_L);
    std::printf("deflation_residual = %.6e\ntime_per_eigenvalue_s = %.4f\n",
                spec.deflation_residual, per_eig);

    if (!opt.json_out.empty()) {
        json jvals = json::array();
        for (const auto& v : vals) jvals.push_back({v.st, v.du});
        json jiters = json::array();
        for (const auto& p : spec.pairs) jiters.push_back(p.iters);
        std::ofstream out(opt.json_out);
        out << json{{"eigenvalues", jvals},
                    {"iterations", jiters},
                    {"e_lambda", e_lambda},
                    {"e_L", e_L},
                    {"deflation_residual", spec.deflation_residual},
                    {"time_per_eigenvalue_s", per_eig}}
                   .dump(2)
            << '\n';
    }
    if (!spec.all_converged) {
        std::fprintf(stderr, "at least one deflation step did not converge\n");
        return kExitConvergence;
    }
    return kExitOk;
}

struct GenOptions {
    std::size_t n = 5;
    double sparsity = 0.0;  // 0 -> circle
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

int run_generate(const GenOptions& opt) {
    Rng rng(opt.seed);
    const Graph g = opt.sparsity > 0.0 ? random_graph(opt.n, opt.sparsity, rng)
                                       : circle_graph(opt.n);
    DQVector poses(opt.n);
    for (std::size_t i = 0; i < opt.n; ++i) poses[i] = random_unit_dq(rng);
    const LaplacianBundle lb = laplacian(g, poses);

    fs::create_directories(opt.out_dir);
    const std::string mat = (fs::path(opt.out_dir) / "laplacian.json").string();
    const std::string pos = (fs::path(opt.out_dir) / "poses.csv").string();
    const std::string edg = (fs::path(opt.out_dir) / "edges.csv").string();
    write_matrix_json(mat, lb.L);
    write_vector_csv(pos, poses);
    write_edges_csv(edg, g);
    std::printf("matrix: %s\nposes: %s\nedges: %s\n", mat.c_str(), pos.c_str(), edg.c_str());
    return kExitOk;
}

struct SlamOptions {
    std::string problem_file;
    std::vector<std::size_t> circle;     // [n]
    std::vector<double> randgraph;       // [n, ratio]
    double noise = 0.0;
    int reps = 1;
    std::uint64_t seed = 0;
    std::string out_dir;
    bool allow_partial = false;
    double rho0 = 0.01, rho1 = 1.1, beta = 1e-5;
    int k_max = 1000;
    bool literal_x1 = false;
    bool no_polish = false;
};

struct RepOutcome {
    SlamResult result;
    double e_x = -1.0, e_Q = -1.0;
    double time_s = 0.0;
};

int run_slam(const SlamOptions& opt) {
    const int modes = int(!opt.problem_file.empty()) + int(!opt.circle.empty()) +
                      int(!opt.randgraph.empty());
    if (modes != 1) {
        std::fprintf(stderr, "choose exactly one of --problem, --circle, --randgraph\n");
        return kExitInput;
    }

    auto run_rep = [&](int rep) -> RepOutcome {
        const std::uint64_t rep_seed = opt.seed + static_cast<std::uint64_t>(rep);
        SlamConfig cfg;
        cfg.rho0 = opt.rho0;
        cfg.rho1 = opt.rho1;
        cfg.beta = opt.beta;
        cfg.k_max = opt.k_max;
        cfg.literal_x1 = opt.literal_x1;
        cfg.polish = !opt.no_polish;
        cfg.seed = rep_seed;

        const double t0 = now_s();
        if (!opt.problem_file.empty()) {
            const PoseGraph p = read_problem_json(opt.problem_file);
            RepOutcome out{solve(p, cfg)};
            out.time_s = now_s() - t0;
            return out;
        }
        Rng rng(rep_seed * 2654435761u + 17);
        const std::size_t n = opt.circle.empty() ? std::size_t(opt.randgraph[0]) : opt.circle[0];
        const auto arcs = opt.circle.empty() ? random_arcs(n, opt.randgraph[1], rng)
                                             : circle_arcs(n);
        DQVector poses(n);
        for (std::size_t i = 0; i < n; ++i) poses[i] = random_unit_dq(rng);
        PoseGraph problem = build_problem(poses, arcs);
        if (opt.noise > 0.0) problem = add_noise(problem, opt.noise, rng).first;

        RepOutcome out{solve(problem, cfg)};
        std::tie(out.e_x, out.e_Q) = slam_errors(poses, out.result, measurement_matrix(poses));
        out.time_s = now_s() - t0;
        if (!opt.out_dir.empty())
            write_problem_json(
                (fs::path(opt.out_dir) / ("problem_rep" + std::to_string(rep) + ".json")).string(),
                problem);
        return out;
    };

    if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

    std::vector<RepOutcome> outcomes;
    outcomes.reserve(opt.reps);
    {
        std::vector<std::future<RepOutcome>> futs;
        for (int rep = 0; rep < opt.reps; ++rep)
            futs.push_back(std::async(std::launch::async, run_rep, rep));
        for (auto& f : futs) outcomes.push_back(f.get());
    }

    bool all_converged = true;
    double mean_ex = 0, mean_eq = 0, mean_iters = 0, mean_time = 0;
    const bool have_truth = opt.problem_file.empty();
    json per_rep = json::array();
    for (int rep = 0; rep < opt.reps; ++rep) {
        const auto& out = outcomes[rep];
        all_converged = all_converged && out.result.converged;
        mean_iters += out.result.iters;
        mean_time += out.time_s;
        if (have_truth) {
            mean_ex += out.e_x;
            mean_eq += out.e_Q;
        }
        per_rep.push_back({{"rep", rep},
                           {"e_x", have_truth ? json(out.e_x) : json()},
                           {"e_Q", have_truth ? json(out.e_Q) : json()},
                           {"iters", out.result.iters},
                           {"converged", out.result.converged},
                           {"time_s", out.time_s}});
        if (!opt.out_dir.empty()) {
            const std::string tag = "_rep" + std::to_string(rep);
            write_vector_csv((fs::path(opt.out_dir) / ("poses" + tag + ".csv")).string(),
                             out.result.x);
            write_gap_trace_csv((fs::path(opt.out_dir) / ("gap_trace" + tag + ".csv")).string(),
                                out.result.gap_trace);
        }
    }
    mean_ex /= opt.reps;
    mean_eq /= opt.reps;
    mean_iters /= opt.reps;
    mean_time /= opt.reps;

    if (have_truth) std::printf("e_x = %.6e\ne_Q = %.6e\n", mean_ex, mean_eq);
    std::printf("iters = %.1f\ntime_s = %.4f\nconverged = %s\n", mean_iters, mean_time,
                all_converged ? "true" : "false");

    const json metrics{{"e_x", have_truth ? json(mean_ex) : json()},
                       {"e_Q", have_truth ? json(mean_eq) : json()},
                       {"iters", mean_iters},
                       {"time_s", mean_time},
                       {"converged", all_converged},
                       {"reps", opt.reps},
                       {"per_rep", per_rep}};
    if (!opt.out_dir.empty()) {
        std::ofstream out(fs::path(opt.out_dir) / "metrics.json");
        out << metrics.dump(2) << '\n';
    }
    if (!all_converged && !opt.allow_partial) return kExitConvergence;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual quaternion Hermitian eigensolver and SLAM experiments"};
    app.require_subcommand(1);

    EigOptions eig;
    auto* cmd_eig = app.add_subcommand("eig", "dominant eigenpair of a Hermitian matrix file");
    cmd_eig->add_option("matrix", eig.matrix_file, "matrix JSON file")->required();
    cmd_eig->add_option("--tol", eig.tol, "stopping tolerance delta");
    cmd_eig->add_option("--max-iters", eig.max_iters, "iteration cap");
    cmd_eig->add_option("--seed", eig.seed, "RNG seed for the start vector");
    cmd_eig->add_option("--trace-out", eig.trace_out, "per-iteration trace CSV");

    EigsAllOptions eigs;
    auto* cmd_eigs = app.add_subcommand("eigs-all", "all appreciable eigenvalues by deflation");
    cmd_eigs->add_option("matrix", eigs.matrix_file, "matrix JSON file")->required();
    cmd_eigs->add_option("--tol", eigs.tol, "stopping tolerance delta");
    cmd_eigs->add_option("--max-iters", eigs.max_iters, "iteration cap per eigenvalue");
    cmd_eigs->add_option("--gamma", eigs.gamma, "deflation stop (default 1e-6 ||Q_st||_F)");
    cmd_eigs->add_option("--seed", eigs.seed, "RNG seed");
    cmd_eigs->add_option("--json-out", eigs.json_out, "machine-readable results");

    GenOptions circle;
    auto* cmd_circle = app.add_subcommand("circle", "Laplacian of a circle with random poses");
    cmd_circle->add_option("--n", circle.n, "vertex count")->required();
    cmd_circle->add_option("--seed", circle.seed, "RNG seed");
    cmd_circle->add_option("--out-dir", circle.out_dir, "output directory");

    GenOptions rand_g;
    auto* cmd_rand = app.add_subcommand("randgraph", "Laplacian of a random graph");
    cmd_rand->add_option("--n", rand_g.n, "vertex count")->required();
    cmd_rand->add_option("--sparsity", rand_g.sparsity, "edge sparsity m/n^2")->required();
    cmd_rand->add_option("--seed", rand_g.seed, "RNG seed");
    cmd_rand->add_option("--out-dir", rand_g.out_dir, "output directory");

    SlamOptions slam;
    auto* cmd_slam = app.add_subcommand("slam", "pose-graph SLAM by rank-one completion");
    cmd_slam->add_option("--problem", slam.problem_file, "problem JSON file");
    cmd_slam->add_option("--circle", slam.circle, "circle instance: n")->expected(1);
    cmd_slam->add_option("--randgraph", slam.randgraph, "random instance: n ratio")->expected(2);
    cmd_slam->add_option("--noise", slam.noise, "relative noise level");
    cmd_slam->add_option("--reps", slam.reps, "repetitions with derived seeds");
    cmd_slam->add_option("--seed", slam.seed, "base seed");
    cmd_slam->add_option("--out-dir", slam.out_dir, "artifact directory");
    cmd_slam->add_flag("--allow-partial", slam.allow_partial, "exit 0 despite non-convergence");
    cmd_slam->add_option("--rho0", slam.rho0, "initial penalty");
    cmd_slam->add_option("--rho1", slam.rho1, "penalty growth factor");
    cmd_slam->add_option("--beta", slam.beta, "gap stopping tolerance");
    cmd_slam->add_option("--kmax", slam.k_max, "iteration cap");
    cmd_slam->add_flag("--literal-x1", slam.literal_x1, "unconjugated X1 data terms");
    cmd_slam->add_flag("--no-polish", slam.no_polish, "skip the pose-manifold polish");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eig->parsed()) return run_eig(eig);
        if (cmd_eigs->parsed()) return run_eigs_all(eigs);
        if (cmd_circle->parsed()) return run_generate(circle);
        if (cmd_rand->parsed()) return run_generate(rand_g);
        if (cmd_slam->parsed()) return run_slam(slam);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const InvalidSparsity& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "precondition error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    }
    return kExitOk;
}
