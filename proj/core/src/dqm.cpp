#include "tfbs/dqm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tfbs {
namespace {

// Node values of the standard cubic spline C_j at s_{j-2}..s_{j+2}.
constexpr std::array<double, 5> kNodeValue = {0.0, 1.0, 4.0, 1.0, 0.0};
// First-derivative node values times h.
constexpr std::array<double, 5> kNodeDeriv = {0.0, 3.0, 0.0, -3.0, 0.0};

// Modified basis j as a combination of standard splines (index, coefficient).
std::vector<std::pair<int, double>> basis_combo(int j, int M) {
    if (j == 0) return {{0, 1.0}, {-1, 4.0}};
    if (j == 1) return {{1, 1.0}, {-1, -3.5}, {0, 5.0 / 8.0}};
    if (j == 2) return {{2, 1.0}, {-1, 88.0 / 37.0}, {0, -21.0 / 37.0}, {1, -4.0 / 37.0}};
    if (j == 3) return {{3, 1.0}, {-1, -1.0}, {0, 0.25}, {2, -0.25}};
    if (j == M) return {{M, 1.0}, {M + 1, 4.0}};
    if (j == M - 1) return {{M - 1, 1.0}, {M + 1, -3.5}, {M, 5.0 / 8.0}};
    if (j == M - 2) return {{M - 2, 1.0}, {M + 1, 88.0 / 37.0}, {M, -21.0 / 37.0}, {M - 1, -4.0 / 37.0}};
    if (j == M - 3) return {{M - 3, 1.0}, {M + 1, -1.0}, {M, 0.25}, {M - 2, -0.25}};
    return {{j, 1.0}};
}

void check_size(int M) {
    if (M < 8) throw std::invalid_argument("dqm: M must be at least 8");
}

}  // namespace

double spline_value(int j, double s, double s0, double h) {
    const double t = (s - (s0 + j * h)) / h;  // local coordinate, nodes at integers
    const double at = std::abs(t);
    if (at >= 2.0) return 0.0;
    if (at >= 1.0) {
        const double u = 2.0 - at;
        return u * u * u;
    }
    const double u = 2.0 - at, v = 1.0 - at;
    return u * u * u - 4.0 * v * v * v;
}

double spline_deriv(int j, double s, double s0, double h) {
    const double t = (s - (s0 + j * h)) / h;
    const double at = std::abs(t);
    const double sign = t < 0.0 ? 1.0 : -1.0;
    if (at >= 2.0) return 0.0;
    if (at >= 1.0) {
        const double u = 2.0 - at;
        return sign * 3.0 * u * u / h;
    }
    const double u = 2.0 - at, v = 1.0 - at;
    return sign * (3.0 * u * u - 12.0 * v * v) / h;
}

double spline_deriv2(int j, double s, double s0, double h) {
    const double t = (s - (s0 + j * h)) / h;
    const double at = std::abs(t);
    if (at >= 2.0) return 0.0;
    if (at >= 1.0) return 6.0 * (2.0 - at) / (h * h);
    return (6.0 * (2.0 - at) - 24.0 * (1.0 - at)) / (h * h);
}

double modified_basis_eval(int j, double s, int M, double s0, double h) {
    check_size(M);
    double v = 0.0;
    for (auto [m, cf] : basis_combo(j, M)) v += cf * spline_value(m, s, s0, h);
    return v;
}

double modified_basis_deriv(int j, double s, int M, double s0, double h) {
    check_size(M);
    double v = 0.0;
    for (auto [m, cf] : basis_combo(j, M)) v += cf * spline_deriv(m, s, s0, h);
    return v;
}

DenseMatrix assemble_A(int M) {
    check_size(M);
    DenseMatrix A(M + 1, M + 1);
    for (int i = 0; i <= M; ++i)
        for (auto [m, cf] : basis_combo(i, M))
            for (int off = -2; off <= 2; ++off) {
                const int j = m + off;
                if (j >= 0 && j <= M) A(i, j) += cf * kNodeValue[off + 2];
            }
    return A;
}

DenseMatrix assemble_B(int M) {
    check_size(M);
    DenseMatrix B(M + 1, M + 1);
    for (int i = 0; i <= M; ++i)
        for (auto [m, cf] : basis_combo(i, M))
            for (int off = -2; off <= 2; ++off) {
                const int j = m + off;
                if (j >= 0 && j <= M) B(i, j) += cf * kNodeDeriv[off + 2];
            }
    return B;
}

DenseMatrix compute_X(int M) {
    const DenseMatrix A = assemble_A(M);
    const DenseMatrix B = assemble_B(M);
    return lu_factor(A).solve_matrix(B).transpose();
}

DenseMatrix compute_Y(const DenseMatrix& X) {
    if (X.rows() != X.cols()) throw std::invalid_argument("compute_Y: X must be square");
    return matmul(X, X);
}

WeightMatrices make_weight_matrices(int M) {
    DenseMatrix X = compute_X(M);
    DenseMatrix Y = compute_Y(X);
    return WeightMatrices{M, std::move(X), std::move(Y)};
}

}  // namespace tfbs
