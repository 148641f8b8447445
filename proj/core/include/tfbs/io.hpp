#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tfbs/analysis.hpp"
#include "tfbs/matrix.hpp"
#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"
#include "tfbs/stability.hpp"

namespace tfbs {

/// Fixed scientific formatting (6 significant digits) used for all CSV output.
std::string format_sci(double v);

void write_history_csv(const SolutionHistory& hist, const std::string& path);
void write_curve_csv(const SolutionHistory& hist, const ProblemSpec& p, const std::string& path);
void write_surface_csv(const SolutionHistory& hist, const ProblemSpec& p, const std::string& path);
void write_matrix_csv(const DenseMatrix& m, const std::string& path);
void write_table_csv(const ConvergenceTable& table, const std::string& path);

nlohmann::json summary_json(const SolutionHistory& hist, const ProblemSpec& p,
                            const std::optional<ErrorReport>& errors);
nlohmann::json table_json(const ConvergenceTable& table);
nlohmann::json stability_json(const StabilityReport& r);
std::string stability_text(const StabilityReport& r);

/// One golden-table cell group (a row of one alpha block).
struct GoldenRow {
    double alpha;
    int level;
    int M;
    int N;
    double l2;
    double linf;
    std::optional<double> oc_l2;
    std::optional<double> oc_linf;
    bool l2_skip = false;
    bool linf_skip = false;
    bool oc_l2_skip = false;
    bool oc_linf_skip = false;
    std::string note;
};

std::vector<GoldenRow> load_golden_csv(const std::string& path);

struct GoldenCellResult {
    double alpha;
    int level;
    std::string metric;  // "l2" | "linf" | "oc_l2" | "oc_linf"
    double golden;
    double computed;
    double deviation;  // relative for values, absolute for orders
    bool skipped;
    bool pass;
    std::string note;
};

struct GoldenComparison {
    std::string table;
    bool values_checked;  // false for order-only tables
    double value_tol;
    double order_tol;
    std::vector<GoldenCellResult> cells;
    bool all_pass() const;
};

/// Tables 3/5 carry documented duplication anomalies and are compared on
/// orders only; the rest compare values (nodal-L2 convention) and orders.
GoldenComparison compare_to_golden(const std::string& table_name,
                                   const std::vector<GoldenRow>& golden,
                                   const std::vector<ConvergenceTable>& computed,
                                   double value_tol, double order_tol);

nlohmann::json comparison_json(const GoldenComparison& cmp);
GoldenComparison comparison_from_json(const nlohmann::json& j);

/// Builds a problem from a config object: either a registry key or an inline
/// "custom" definition with polynomial data.
ProblemSpec problem_from_config(const nlohmann::json& cfg, double alpha);

}  // namespace tfbs
