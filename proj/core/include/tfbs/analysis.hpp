#pragma once

#include <string>
#include <vector>

#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"

namespace tfbs {

enum class MeasureTime { final_time, max_over_time };

/// Error norms of a numerical vector against the exact one.
/// l2 carries the sqrt(h) scaling; l2_nodal is the plain vector 2-norm,
/// which is the convention the reference tables follow.
struct ErrorReport {
    double l2;
    double l2_nodal;
    double linf;
};

ErrorReport error_norms(const std::vector<double>& numerical,
                        const std::vector<double>& exact, double h);

/// Errors of a finished run against the problem's exact solution.
ErrorReport measure_errors(const SolutionHistory& hist, const ProblemSpec& p,
                           MeasureTime when = MeasureTime::final_time);

/// Observed order of convergence between two refinement levels.
double order(double e_coarse, double e_fine, double step_coarse, double step_fine);

struct ConvergenceRow {
    int level;
    int M;
    int N;
    bool failed = false;
    double l2 = 0.0;
    double l2_nodal = 0.0;
    double linf = 0.0;
    double oc_l2 = 0.0;    // nodal-convention orders; absent (0) on the first row
    double oc_linf = 0.0;
    bool has_order = false;
};

struct ConvergenceTable {
    std::string axis;  // "spatial" | "temporal"
    std::string problem_id;
    double alpha;
    Scheme scheme;
    std::vector<ConvergenceRow> rows;
};

struct SweepOptions {
    Scheme scheme = Scheme::dqm;
    BoundaryMode boundary = BoundaryMode::collocated;
    MeasureTime measure = MeasureTime::final_time;
    bool verbatim_history = false;
};

/// Named (M, N) schedules from the reference tables:
/// "table2"/"table4": M = 2^m*10, N = 10^{m+1}, m = 0..2 (spatial)
/// "table3"/"table5": M = 80, N = 2^m*10, m = 0..2 (temporal)
/// "fdm-table": same pairs as table2
std::vector<std::pair<int, int>> named_schedule(const std::string& name);
bool schedule_is_temporal(const std::string& name);

ConvergenceTable spatial_sweep(const ProblemSpec& p,
                               const std::vector<std::pair<int, int>>& schedule,
                               const SweepOptions& opt = {});
ConvergenceTable temporal_sweep(const ProblemSpec& p,
                                const std::vector<std::pair<int, int>>& schedule,
                                const SweepOptions& opt = {});

}  // namespace tfbs
