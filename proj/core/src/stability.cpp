#include "tfbs/stability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfbs {

VarahConstants varah_constants(const DenseMatrix& A, const DenseMatrix& B) {
    const std::size_t n = A.rows();
    double beta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double off = 0.0;
        for (std::size_t l = 0; l < n; ++l)
            if (l != k) off += std::abs(A(l, k));
        beta = std::min(beta, std::abs(A(k, k)) - off);
    }
    if (!(beta > 0.0))
        throw std::domain_error("varah_constants: A^T is not strictly diagonally dominant");
    const double rx = one_norm(B) / beta;  // ||B^T||_inf = one-norm of B
    return VarahConstants{beta, rx, rx * rx};
}

double empirical_inverse_inf_norm(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    const LUFactorization f(m);
    // Row absolute sums of the inverse = column-wise accumulation over solves.
    std::vector<double> row_abs(n, 0.0);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const auto col = f.solve(e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) row_abs[i] += std::abs(col[i]);
    }
    double best = 0.0;
    for (double v : row_abs) best = std::max(best, v);
    return best;
}

StabilityReport check_stability(const ProblemSpec& p, const Mesh& mesh,
                                const WeightMatrices& w, double d) {
    if (!(p.coeffs.c > 0.0))
        throw std::invalid_argument("check_stability: requires reaction coefficient c > 0");
    StabilityReport r;
    r.alpha = p.coeffs.alpha;
    r.M = mesh.M;
    r.N = mesh.N;
    r.d = d;

    const DenseMatrix A = assemble_A(mesh.M);
    const DenseMatrix B = assemble_B(mesh.M);
    const VarahConstants vc = varah_constants(A, B);
    r.beta = vc.beta;
    r.R_X = vc.R_X;
    r.R_Y = vc.R_Y;

    const double a = p.coeffs.a, b = p.coeffs.b, c = p.coeffs.c, h = mesh.h;
    const DenseMatrix P = (a / (h * h)) * w.Y + (b / h) * w.X;
    r.P_norm = inf_norm(P);
    r.P_bound = std::abs(a) / (h * h) * vc.R_Y + std::abs(b) / h * vc.R_X;
    r.threshold = 1.0 + c * d;
    r.Q_norm = d * r.P_norm / r.threshold;
    r.condition_ok = d * r.P_norm < r.threshold;
    r.theoretical_bound = r.condition_ok ? 1.0 / (r.threshold - d * r.P_norm)
                                         : std::numeric_limits<double>::quiet_NaN();

    if (mesh.M <= 64) {
        const int n = mesh.M + 1;
        DenseMatrix L(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) L(i, j) = -d * P(i, j);
            L(i, i) += r.threshold;
        }
        r.empirical_inverse_norm = empirical_inverse_inf_norm(L);
        for (int j = 0; j < n; ++j) {
            L(0, j) = 0.0;
            L(n - 1, j) = 0.0;
        }
        L(0, 0) = 1.0;
        L(n - 1, n - 1) = 1.0;
        r.empirical_inverse_norm_dirichlet = empirical_inverse_inf_norm(L);
    }
    return r;
}

double neumann_partial_sum_check(const DenseMatrix& Q, int n_terms) {
    if (Q.rows() != Q.cols()) throw std::invalid_argument("neumann_partial_sum_check: Q must be square");
    if (!(inf_norm(Q) < 1.0))
        throw std::invalid_argument("neumann_partial_sum_check: requires ||Q||_inf < 1");
    const std::size_t n = Q.rows();
    const DenseMatrix I = DenseMatrix::identity(n);
    const DenseMatrix inv = lu_factor(I - Q).solve_matrix(I);
    DenseMatrix partial = I;
    DenseMatrix power = I;
    for (int k = 1; k <= n_terms; ++k) {
        power = matmul(power, Q);
        partial = partial + power;
    }
    return inf_norm(inv - partial);
}

}  // namespace tfbs
