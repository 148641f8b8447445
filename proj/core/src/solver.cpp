#include "tfbs/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace tfbs {

std::string to_string(Scheme s) { return s == Scheme::dqm ? "dqm" : "fdm"; }

std::string to_string(BoundaryMode b) {
    return b == BoundaryMode::collocated ? "collocated" : "dirichlet-rows";
}

Mesh Mesh::make(const ProblemSpec& p, int M, int N, int min_M) {
    if (M < min_M) throw std::invalid_argument("mesh: M below minimum for the scheme");
    if (N < 1) throw std::invalid_argument("mesh: N must be at least 1");
    Mesh m;
    m.M = M;
    m.N = N;
    m.h = (p.domain_hi - p.domain_lo) / M;
    m.dt = p.horizon / N;
    m.nodes.resize(M + 1);
    for (int i = 0; i <= M; ++i) m.nodes[i] = p.domain_lo + i * m.h;
    m.nodes[M] = p.domain_hi;
    return m;
}

namespace {

void apply_dirichlet_rows(DenseMatrix& L) {
    const std::size_t n = L.rows();
    for (std::size_t j = 0; j < n; ++j) {
        L(0, j) = 0.0;
        L(n - 1, j) = 0.0;
    }
    L(0, 0) = 1.0;
    L(n - 1, n - 1) = 1.0;
}

SystemOperator finish_operator(DenseMatrix raw, Scheme scheme, BoundaryMode boundary) {
    SystemOperator op;
    op.scheme = scheme;
    op.boundary = boundary;
    op.L_raw = raw;
    if (boundary == BoundaryMode::dirichlet_rows) apply_dirichlet_rows(raw);
    op.L = std::move(raw);
    op.factorization = std::make_shared<LUFactorization>(op.L);
    return op;
}

}  // namespace

SystemOperator assemble_operator(const ProblemSpec& p, const Mesh& mesh,
                                 const WeightMatrices& w, double d, BoundaryMode boundary) {
    if (w.M != mesh.M) throw std::invalid_argument("assemble_operator: weight size mismatch");
    const int n = mesh.M + 1;
    const double a = p.coeffs.a, b = p.coeffs.b, c = p.coeffs.c;
    const double ka = a * d / (mesh.h * mesh.h);
    const double kb = b * d / mesh.h;
    DenseMatrix L(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) L(i, j) = -ka * w.Y(i, j) - kb * w.X(i, j);
        L(i, i) += 1.0 + c * d;
    }
    return finish_operator(std::move(L), Scheme::dqm, boundary);
}

SystemOperator assemble_operator_fdm(const ProblemSpec& p, const Mesh& mesh, double d) {
    if (mesh.M < 2) throw std::invalid_argument("assemble_operator_fdm: M must be at least 2");
    const int n = mesh.M + 1;
    const double a = p.coeffs.a, b = p.coeffs.b, c = p.coeffs.c;
    const double ka = a * d / (mesh.h * mesh.h);
    const double kb = b * d / (2.0 * mesh.h);
    DenseMatrix L(n, n);
    for (int i = 1; i < n - 1; ++i) {
        L(i, i - 1) = -(ka - kb);
        L(i, i) = 1.0 + c * d + 2.0 * ka;
        L(i, i + 1) = -(ka + kb);
    }
    L(0, 0) = 1.0 + c * d;
    L(n - 1, n - 1) = 1.0 + c * d;
    return finish_operator(std::move(L), Scheme::fdm, BoundaryMode::dirichlet_rows);
}

SolutionHistory march(const ProblemSpec& p, const Mesh& mesh, const SystemOperator& op,
                      const L1Weights& w, bool verbatim_history) {
    const int n = mesh.M + 1;
    SolutionHistory hist;
    hist.problem_id = p.id;
    hist.mesh = mesh;
    hist.alpha = w.alpha;
    hist.scheme = op.scheme;
    hist.boundary = op.boundary;
    hist.u.reserve(mesh.N + 1);

    std::vector<double> u0(n);
    for (int i = 0; i < n; ++i) u0[i] = p.initial(mesh.nodes[i]);
    if (op.boundary == BoundaryMode::dirichlet_rows) {
        u0[0] = p.left_bc(0.0);
        u0[n - 1] = p.right_bc(0.0);
    }
    hist.u.push_back(std::move(u0));

    for (int k = 0; k < mesh.N; ++k) {
        const double eta = (k + 1) * mesh.dt;
        std::vector<double> rhs = history_rhs(hist.u, w, k, verbatim_history);
        for (int i = 0; i < n; ++i) rhs[i] += w.d * p.source(mesh.nodes[i], eta);
        if (op.boundary == BoundaryMode::dirichlet_rows) {
            rhs[0] = p.left_bc(eta);
            rhs[n - 1] = p.right_bc(eta);
        }
        std::vector<double> u = op.factorization->solve(rhs);
        for (double v : u)
            if (!std::isfinite(v))
                throw std::runtime_error("march: non-finite value at step " + std::to_string(k + 1));
        hist.u.push_back(std::move(u));
    }
    return hist;
}

SolutionHistory solve_problem(const ProblemSpec& p, int M, int N, Scheme scheme,
                              BoundaryMode boundary, bool verbatim_history) {
    p.validate();
    const Mesh mesh = Mesh::make(p, M, N, scheme == Scheme::dqm ? 8 : 2);
    const L1Weights w = l1_weights(p.coeffs.alpha, N, mesh.dt);
    SystemOperator op = scheme == Scheme::dqm
                            ? assemble_operator(p, mesh, make_weight_matrices(M), w.d, boundary)
                            : assemble_operator_fdm(p, mesh, w.d);
    return march(p, mesh, op, w, verbatim_history);
}

}  // namespace tfbs
