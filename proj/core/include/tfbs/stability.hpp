#pragma once

#include <optional>

#include "tfbs/dqm.hpp"
#include "tfbs/matrix.hpp"
#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"

namespace tfbs {

struct VarahConstants {
    double beta;  // minimum column dominance of A
    double R_X;   // ||B^T||_inf / beta
    double R_Y;   // R_X^2
};

/// Column-dominance constants of the weight system. Throws when A^T loses
/// strict diagonal dominance (beta <= 0).
VarahConstants varah_constants(const DenseMatrix& A, const DenseMatrix& B);

struct StabilityReport {
    double alpha;
    int M;
    int N;
    double d;
    double beta;
    double R_X;
    double R_Y;
    double P_norm;             // ||(a/h^2) Y + (b/h) X||_inf
    double P_bound;            // (|a|/h^2) R_Y + (|b|/h) R_X
    double threshold;          // 1 + c d
    double Q_norm;             // d ||P||_inf / (1 + c d)
    bool condition_ok;         // d ||P||_inf < 1 + c d
    double theoretical_bound;  // 1 / ((1+cd) - d ||P||_inf), when condition_ok
    std::optional<double> empirical_inverse_norm;           // ||L^{-1}||_inf, raw operator
    std::optional<double> empirical_inverse_norm_dirichlet;  // after boundary-row replacement
};

/// Evaluates the norm bound chain for a given configuration. The empirical
/// inverse norms are computed only for M <= 64.
StabilityReport check_stability(const ProblemSpec& p, const Mesh& mesh,
                                const WeightMatrices& w, double d);

/// || (I-Q)^{-1} - sum_{k=0}^{n} Q^k ||_inf; requires ||Q||_inf < 1.
double neumann_partial_sum_check(const DenseMatrix& Q, int n_terms);

/// Max row absolute sum of M^{-1}, by solving against all unit vectors.
double empirical_inverse_inf_norm(const DenseMatrix& m);

}  // namespace tfbs
