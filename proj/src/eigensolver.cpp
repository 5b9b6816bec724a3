#include "dqmat/eigensolver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "dqmat/errors.hpp"
#include "dqmat/projections.hpp"

namespace dqmat {

namespace {

double residual_2R(const DQVector& y, const DQVector& v, DualNumber lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const DualQuaternion d = y[i] - v[i] * lambda;
        s += q_norm_sq(d.st) + q_norm_sq(d.du);
    }
    return std::sqrt(s);
}

DualNumber rayleigh(const DQVector& v, const DQVector& y) {
    const DualQuaternion q = inner(v, y);
    // For Hermitian Q the vector parts vanish up to rounding.
    return {q.st.w, q.du.w};
}

}  // namespace

EigenPair power_method(const DQMatrix& Q, const PowerConfig& cfg) {
    if (!Q.square()) throw DimensionMismatch("power_method: matrix must be square");
    if (cfg.check_hermitian && !Q.is_hermitian()) throw NotHermitian("power_method: matrix is not Hermitian");
    if (mat_normF_st(Q) <= kAppreciableTol)
        throw ZeroStandardPart("power_method: standard part is zero");
    if (cfg.max_iters < 1 || cfg.tol <= 0.0)
        throw std::invalid_argument("power_method: invalid config");

    const double stop_scale = cfg.tol * mat_normFR(Q);

    DQVector v = [&] {
        if (cfg.init) {
            if (cfg.init->size() != Q.rows()) throw DimensionMismatch("power_method: init size");
            return project_unit_vec(*cfg.init);
        }
        Rng rng(cfg.seed);
        return random_unit_vec(rng, Q.rows());
    }();

    EigenPair best;
    best.vector = v;
    best.residual_2R = std::numeric_limits<double>::infinity();

    for (int k = 1; k <= cfg.max_iters; ++k) {
        const DQVector y = mat_vec(Q, v);
        const DualNumber lambda = rayleigh(v, y);
        const double res = residual_2R(y, v, lambda);
        if (cfg.record_trace) best.trace.push_back({k, res, lambda});
        if (res <= best.residual_2R) {
            best.value = lambda;
            best.vector = v;
            best.residual_2R = res;
            best.iters = k;
        }
        if (res <= stop_scale) {
            best.converged = true;
            return best;
        }
        v = project_unit_vec(y);
    }
    best.converged = false;  // soft failure; best iterate retained
    return best;
}

std::pair<DualNumber, DQVector> recover_dual_part(const DQMatrix& Q,
                                                  const std::vector<Quaternion>& v_st) {
    if (!Q.square() || Q.rows() != v_st.size())
        throw DimensionMismatch("recover_dual_part: shape mismatch");
    const std::size_t n = v_st.size();

    // lambda_st from the Rayleigh quotient of the standard parts,
    // lambda_I = v_st* Q_I v_st.
    double lambda_st = 0.0, lambda_du = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion acc_st = Quaternion::zero(), acc_du = Quaternion::zero();
        for (std::size_t j = 0; j < n; ++j) {
            acc_st = acc_st + Q.at(i, j).st * v_st[j];
            acc_du = acc_du + Q.at(i, j).du * v_st[j];
        }
        lambda_st += q_dot(v_st[i], acc_st);
        lambda_du += q_dot(v_st[i], acc_du);
    }

    // Real 4n embedding: quaternion left multiplication as a 4x4 block.
    auto lmat = [](const Quaternion& q) {
        Eigen::Matrix4d L;
        L << q.w, -q.x, -q.y, -q.z,
             q.x,  q.w, -q.z,  q.y,
             q.y,  q.z,  q.w, -q.x,
             q.z, -q.y,  q.x,  q.w;
        return L;
    };

    const auto N = static_cast<Eigen::Index>(4 * n);
    Eigen::MatrixXd M(N + 1, N);
    Eigen::VectorXd b(N + 1);
    M.setZero();
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion rhs_i = lambda_du * v_st[i];
        for (std::size_t j = 0; j < n; ++j) {
            M.block<4, 4>(4 * i, 4 * j) = lmat(Q.at(i, j).st);
            rhs_i = rhs_i - Q.at(i, j).du * v_st[j];
        }
        M.block<4, 4>(4 * i, 4 * i) -= lambda_st * Eigen::Matrix4d::Identity();
        b.segment<4>(4 * i) << rhs_i.w, rhs_i.x, rhs_i.y, rhs_i.z;
        M.row(N).segment<4>(4 * i) << v_st[i].w, v_st[i].x, v_st[i].y, v_st[i].z;
    }
    b(N) = 0.0;

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(M);
    const Eigen::VectorXd x = cod.solve(b);

    DQVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = {v_st[i], {x(4 * i), x(4 * i + 1), x(4 * i + 2), x(4 * i + 3)}};

    // Consistency: the dual-part eigen-equation must hold; an inconsistent
    // system means the dual part is not recoverable from v_st alone.
    double res_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion r = lambda_st * v[i].du + lambda_du * v_st[i];
        for (std::size_t j = 0; j < n; ++j)
            r = r - Q.at(i, j).st * v[j].du - Q.at(i, j).du * v_st[j];
        res_sq += q_norm_sq(r);
    }
    const double scale = 1.0 + mat_normFR(Q);
    if (std::sqrt(res_sq) > 1e-8 * scale)
        throw SingularSystem("recover_dual_part: constrained system is inconsistent");

    return {DualNumber{lambda_st, lambda_du}, v};
}

SpectrumResult all_eigenpairs(const DQMatrix& Q, const PowerConfig& cfg, double gamma) {
    if (!Q.square()) throw DimensionMismatch("all_eigenpairs: matrix must be square");
    if (cfg.check_hermitian && !Q.is_hermitian())
        throw NotHermitian("all_eigenpairs: matrix is not Hermitian");
    if (gamma < 0.0) gamma = 1e-6 * mat_normF_st(Q);

    SpectrumResult result;
    result.n = Q.rows();
    DQMatrix deflated = Q;
    result.deflation_residual = mat_normF_st(deflated);
    PowerConfig sub = cfg;
    sub.check_hermitian = false;  // deflation updates preserve Hermitian structure

    for (std::size_t k = 0; k < Q.rows(); ++k) {
        if (result.deflation_residual <= gamma) break;
        sub.seed = cfg.seed + k;
        EigenPair pair;
        try {
            pair = power_method(deflated, sub);
        } catch (const Error& e) {
            throw Error("all_eigenpairs: deflation step " + std::to_string(k) + ": " + e.what());
        }
        if (!pair.converged) result.all_converged = false;
        deflated = deflated - rank_one(pair.value, pair.vector);
        result.deflation_residual = mat_normF_st(deflated);
        result.pairs.push_back(std::move(pair));
        if (result.deflation_residual <= gamma) break;
    }
    std::stable_sort(result.pairs.begin(), result.pairs.end(),
                     [](const EigenPair& a, const EigenPair& b) { return dn_cmp(a.value, b.value) > 0; });
    return result;
}

std::vector<DualNumber> SpectrumResult::eigenvalues_padded() const {
    std::vector<DualNumber> vals;
    vals.reserve(n);
    for (const auto& p : pairs) vals.push_back(p.value);
    for (std::size_t k = pairs.size(); k < n; ++k) vals.push_back({0.0, 0.0});
    std::stable_sort(vals.begin(), vals.end(),
                     [](DualNumber a, DualNumber b) { return dn_cmp(a, b) > 0; });
    return vals;
}

std::pair<DualNumber, DQVector> best_rank_one(const DQMatrix& Q, const PowerConfig& cfg) {
    if (!Q.appreciable()) throw ZeroStandardPart("best_rank_one: matrix is not appreciable");
    const EigenPair pair = power_method(Q, cfg);
    return {pair.value, pair.vector};
}

std::vector<DualNumber> singular_values(const DQMatrix& A, const PowerConfig& cfg, double gamma) {
    const DQMatrix B = mat_mul(mat_conj_transpose(A), A);
    if (gamma < 0.0) gamma = 1e-6 * mat_normF_st(B);
    const SpectrumResult spec = all_eigenpairs(B, cfg, gamma);
    std::vector<DualNumber> svals;
    for (const auto& p : spec.pairs) {
        if (p.value.st <= gamma) continue;
        svals.push_back(dn_sqrt(p.value));
    }
    return svals;
}

void write_trace_csv(const std::string& path, const std::vector<TracePoint>& trace) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open trace file: " + path);
    out << "iter,residual_2R,lambda_st,lambda_du\n";
    char buf[128];
    for (const auto& t : trace) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", t.iter, t.residual_2R,
                      t.value.st, t.value.du);
        out << buf;
    }
}

}  // namespace dqmat
