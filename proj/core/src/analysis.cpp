#include "tfbs/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace tfbs {

ErrorReport error_norms(const std::vector<double>& numerical,
                        const std::vector<double>& exact, double h) {
    if (numerical.size() != exact.size())
        throw std::invalid_argument("error_norms: length mismatch");
    double sq = 0.0, mx = 0.0;
    for (std::size_t j = 0; j < numerical.size(); ++j) {
        const double diff = std::abs(numerical[j] - exact[j]);
        sq += diff * diff;
        mx = std::max(mx, diff);
    }
    return ErrorReport{std::sqrt(h * sq), std::sqrt(sq), mx};
}

ErrorReport measure_errors(const SolutionHistory& hist, const ProblemSpec& p,
                           MeasureTime when) {
    if (!p.exact) throw std::invalid_argument("measure_errors: problem has no exact solution");
    const auto& exact = *p.exact;
    const Mesh& mesh = hist.mesh;
    std::vector<double> ex(mesh.M + 1);
    auto at_step = [&](int k) {
        const double eta = k * mesh.dt;
        for (int i = 0; i <= mesh.M; ++i) ex[i] = exact(mesh.nodes[i], eta);
        return error_norms(hist.u[k], ex, mesh.h);
    };
    if (when == MeasureTime::final_time) return at_step(mesh.N);
    ErrorReport best{0.0, 0.0, 0.0};
    for (int k = 1; k <= mesh.N; ++k) {
        const ErrorReport r = at_step(k);
        if (r.linf > best.linf) best = r;
    }
    return best;
}

double order(double e_coarse, double e_fine, double step_coarse, double step_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(step_coarse > 0.0) || !(step_fine > 0.0))
        throw std::invalid_argument("order: all inputs must be positive");
    return std::log(e_coarse / e_fine) / std::log(step_coarse / step_fine);
}

std::vector<std::pair<int, int>> named_schedule(const std::string& name) {
    if (name == "table2" || name == "table4" || name == "fdm-table")
        return {{10, 10}, {20, 100}, {40, 1000}};
    if (name == "table3" || name == "table5")
        return {{80, 10}, {80, 20}, {80, 40}};
    throw std::invalid_argument("unknown schedule: " + name);
}

bool schedule_is_temporal(const std::string& name) {
    return name == "table3" || name == "table5";
}

namespace {

ConvergenceTable run_sweep(const ProblemSpec& p,
                           const std::vector<std::pair<int, int>>& schedule,
                           const SweepOptions& opt, bool temporal) {
    if (schedule.empty()) throw std::invalid_argument("sweep: empty schedule");
    ConvergenceTable table;
    table.axis = temporal ? "temporal" : "spatial";
    table.problem_id = p.id;
    table.alpha = p.coeffs.alpha;
    table.scheme = opt.scheme;
    for (std::size_t m = 0; m < schedule.size(); ++m) {
        auto [M, N] = schedule[m];
        ConvergenceRow row;
        row.level = static_cast<int>(m);
        row.M = M;
        row.N = N;
        try {
            const SolutionHistory hist =
                solve_problem(p, M, N, opt.scheme, opt.boundary, opt.verbatim_history);
            const ErrorReport e = measure_errors(hist, p, opt.measure);
            row.l2 = e.l2;
            row.l2_nodal = e.l2_nodal;
            row.linf = e.linf;
        } catch (const std::exception&) {
            row.failed = true;
        }
        table.rows.push_back(row);
    }
    for (std::size_t m = 1; m < table.rows.size(); ++m) {
        ConvergenceRow& cur = table.rows[m];
        const ConvergenceRow& prev = table.rows[m - 1];
        if (cur.failed || prev.failed) continue;
        const double step_prev = temporal ? p.horizon / prev.N
                                          : (p.domain_hi - p.domain_lo) / prev.M;
        const double step_cur = temporal ? p.horizon / cur.N
                                         : (p.domain_hi - p.domain_lo) / cur.M;
        cur.oc_l2 = order(prev.l2_nodal, cur.l2_nodal, step_prev, step_cur);
        cur.oc_linf = order(prev.linf, cur.linf, step_prev, step_cur);
        cur.has_order = true;
    }
    return table;
}

}  // namespace

ConvergenceTable spatial_sweep(const ProblemSpec& p,
                               const std::vector<std::pair<int, int>>& schedule,
                               const SweepOptions& opt) {
    for (std::size_t m = 1; m < schedule.size(); ++m)
        if (schedule[m].first <= schedule[m - 1].first)
            throw std::invalid_argument("spatial_sweep: schedule must strictly refine in M");
    return run_sweep(p, schedule, opt, false);
}

ConvergenceTable temporal_sweep(const ProblemSpec& p,
                                const std::vector<std::pair<int, int>>& schedule,
                                const SweepOptions& opt) {
    for (std::size_t m = 1; m < schedule.size(); ++m)
        if (schedule[m].second <= schedule[m - 1].second)
            throw std::invalid_argument("temporal_sweep: schedule must strictly refine in N");
    return run_sweep(p, schedule, opt, true);
}

}  // namespace tfbs
