#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tfbs/dqm.hpp"
#include "tfbs/l1.hpp"
#include "tfbs/matrix.hpp"
#include "tfbs/problem.hpp"

namespace tfbs {

enum class Scheme { dqm, fdm };
enum class BoundaryMode {
    collocated,      // operator rows at the boundary nodes kept (reproduces the reference tables)
    dirichlet_rows,  // rows 0 and M replaced by identity, rhs overwritten with boundary data
};

std::string to_string(Scheme s);
std::string to_string(BoundaryMode b);

/// Uniform space-time mesh.
struct Mesh {
    int M;      // space intervals
    int N;      // time steps
    double h;
    double dt;
    std::vector<double> nodes;

    static Mesh make(const ProblemSpec& p, int M, int N, int min_M = 8);
};

/// Time-independent implicit operator with its one-time factorization.
struct SystemOperator {
    DenseMatrix L;         // post boundary treatment (what is actually solved)
    DenseMatrix L_raw;     // the unmodified operator (1+cd)I - (ad/h^2)Y - (bd/h)X
    std::shared_ptr<const LUFactorization> factorization;
    Scheme scheme;
    BoundaryMode boundary;
};

struct SolutionHistory {
    std::vector<std::vector<double>> u;  // U^0 .. U^N
    std::string problem_id;
    Mesh mesh;
    double alpha;
    Scheme scheme;
    BoundaryMode boundary;
};

SystemOperator assemble_operator(const ProblemSpec& p, const Mesh& mesh,
                                 const WeightMatrices& w, double d,
                                 BoundaryMode boundary = BoundaryMode::collocated);

/// Second-order central-difference baseline; tridiagonal stencil, Dirichlet rows.
SystemOperator assemble_operator_fdm(const ProblemSpec& p, const Mesh& mesh, double d);

SolutionHistory march(const ProblemSpec& p, const Mesh& mesh, const SystemOperator& op,
                      const L1Weights& w, bool verbatim_history = false);

/// Convenience driver: weights (DQM only), L1 table, operator, march.
SolutionHistory solve_problem(const ProblemSpec& p, int M, int N, Scheme scheme,
                              BoundaryMode boundary = BoundaryMode::collocated,
                              bool verbatim_history = false);

}  // namespace tfbs
