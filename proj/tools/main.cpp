// tfbs command-line front end.
//
// Subcommands: solve, convergence, stability, weights, compare-golden, plot-data.
// Options can come from a JSON config file (--config); explicitly passed flags
// win over config values. Exit codes: 0 success, 1 validation error,
// 2 numerical failure, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tfbs/analysis.hpp"
#include "tfbs/dqm.hpp"
#include "tfbs/io.hpp"
#include "tfbs/l1.hpp"
#include "tfbs/problem.hpp"
#include "tfbs/solver.hpp"
#include "tfbs/stability.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliError {
    int code;
    std::string msg;
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{3, "cannot open config file: " + path};
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CliError{1, std::string("config parse error: ") + e.what()};
    }
}

// Fill a value from the config when the flag was not given on the command line.
template <typename T>
void apply_config(const CLI::Option* opt, const json& cfg, const char* key, T& out) {
    if (opt->count() == 0 && cfg.contains(key)) out = cfg.at(key).get<T>();
}

std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CliError{1, "empty alpha list"};
    for (double a : out)
        if (!(a > 0.0 && a <= 1.0)) throw CliError{1, "alpha must lie in (0, 1]"};
    return out;
}

// "table2" | "table3" | ... | explicit "M1:N1,M2:N2,...".
std::vector<std::pair<int, int>> parse_schedule(const std::string& text, bool& temporal) {
    try {
        auto named = tfbs::named_schedule(text);
        temporal = tfbs::schedule_is_temporal(text);
        return named;
    } catch (const std::invalid_argument&) {
    }
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw CliError{1, "schedule entry needs M:N form: " + tok};
        out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    if (out.size() < 2) throw CliError{1, "schedule needs at least two (M, N) pairs"};
    for (size_t i = 1; i < out.size(); ++i) {
        const bool refines = out[i].first >= out[i - 1].first && out[i].second >= out[i - 1].second &&
                             out[i] != out[i - 1];
        if (!refines) throw CliError{1, "schedule must be strictly refining"};
    }
    // Explicit schedules default to the axis that actually refines.
    temporal = out.back().first == out.front().first;
    return out;
}

tfbs::Scheme parse_scheme(const std::string& s) {
    if (s == "dqm") return tfbs::Scheme::dqm;
    if (s == "fdm") return tfbs::Scheme::fdm;
    throw CliError{1, "unknown scheme: " + s};
}

tfbs::BoundaryMode parse_boundary(const std::string& s) {
    if (s == "collocated") return tfbs::BoundaryMode::collocated;
    if (s == "dirichlet-rows") return tfbs::BoundaryMode::dirichlet_rows;
    throw CliError{1, "unknown boundary mode: " + s};
}

tfbs::MeasureTime parse_measure(const std::string& s) {
    if (s == "final") return tfbs::MeasureTime::final_time;
    if (s == "max") return tfbs::MeasureTime::max_over_time;
    throw CliError{1, "unknown measure-time mode: " + s};
}

tfbs::ProblemSpec build_problem(const json& cfg, const std::string& key, double alpha) {
    json merged = cfg;
    merged["problem"] = key;
    try {
        return tfbs::problem_from_config(merged, alpha);
    } catch (const json::exception& e) {
        throw CliError{1, std::string("problem config: ") + e.what()};
    } catch (const std::invalid_argument& e) {
        throw CliError{1, e.what()};
    }
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CliError{3, "cannot create output directory: " + dir};
}

template <typename Fn>
void guarded_io(Fn&& fn) {
    try {
        fn();
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError{3, e.what()};
    }
}

template <typename Fn>
auto guarded_compute(Fn&& fn) {
    try {
        return fn();
    } catch (const CliError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw CliError{1, e.what()};
    } catch (const std::domain_error& e) {
        throw CliError{1, e.what()};
    } catch (const std::exception& e) {
        throw CliError{2, e.what()};
    }
}

std::string alpha_tag(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", alpha);
    std::string s(buf);
    for (auto& ch : s)
        if (ch == '.') ch = 'p';
    return s;
}

// ---------------------------------------------------------------- solve

int cmd_solve(const json& cfg, std::string problem, double alpha, int M, int N,
              const std::string& scheme_s, const std::string& boundary_s,
              const std::string& measure_s, bool verbatim, const std::string& out) {
    const auto scheme = parse_scheme(scheme_s);
    const auto boundary = parse_boundary(boundary_s);
    const auto measure = parse_measure(measure_s);

    const auto p = build_problem(cfg, problem, alpha);
    const auto hist = guarded_compute(
        [&] { return tfbs::solve_problem(p, M, N, scheme, boundary, verbatim); });
    std::optional<tfbs::ErrorReport> errors;
    if (p.exact) errors = tfbs::measure_errors(hist, p, measure);

    const json summary = tfbs::summary_json(hist, p, errors);
    std::cout << summary.dump(2) << "\n";
    if (!out.empty()) {
        ensure_dir(out);
        guarded_io([&] {
            std::ofstream js(out + "/summary.json");
            if (!js) throw CliError{3, "cannot open for writing: " + out + "/summary.json"};
            js << summary.dump(2) << "\n";
            tfbs::write_history_csv(hist, out + "/history.csv");
        });
    }
    return 0;
}

// ---------------------------------------------------------------- convergence

int cmd_convergence(const json& cfg, std::string problem, const std::string& alphas_s,
                    const std::string& schedule_s, const std::string& scheme_s,
                    const std::string& boundary_s, const std::string& measure_s, bool verbatim,
                    const std::string& out) {
    const auto alphas = parse_alphas(alphas_s);
    bool temporal = false;
    const auto schedule = parse_schedule(schedule_s, temporal);
    tfbs::SweepOptions opt;
    opt.scheme = parse_scheme(scheme_s);
    opt.boundary = parse_boundary(boundary_s);
    opt.measure = parse_measure(measure_s);
    opt.verbatim_history = verbatim;

    if (!out.empty()) ensure_dir(out);
    for (double alpha : alphas) {
        const auto p = build_problem(cfg, problem, alpha);
        const auto table = guarded_compute([&] {
            return temporal ? tfbs::temporal_sweep(p, schedule, opt)
                            : tfbs::spatial_sweep(p, schedule, opt);
        });
        std::cout << "# " << p.id << " alpha=" << alpha << " (" << table.axis << ", "
                  << tfbs::to_string(opt.scheme) << ")\n";
        std::cout << "level,M,N,l2_nodal,oc_l2,linf,oc_linf\n";
        for (const auto& r : table.rows) {
            std::cout << r.level << "," << r.M << "," << r.N << ","
                      << (r.failed ? "failed" : tfbs::format_sci(r.l2_nodal)) << ","
                      << (r.has_order ? tfbs::format_sci(r.oc_l2) : std::string()) << ","
                      << (r.failed ? "failed" : tfbs::format_sci(r.linf)) << ","
                      << (r.has_order ? tfbs::format_sci(r.oc_linf) : std::string()) << "\n";
        }
        if (!out.empty()) {
            const std::string stem =
                out + "/" + p.id + "_" + table.axis + "_alpha" + alpha_tag(alpha);
            guarded_io([&] {
                tfbs::write_table_csv(table, stem + ".csv");
                std::ofstream js(stem + ".json");
                if (!js) throw CliError{3, "cannot open for writing: " + stem + ".json"};
                js << tfbs::table_json(table).dump(2) << "\n";
            });
        }
    }
    return 0;
}

// ---------------------------------------------------------------- stability

int cmd_stability(const json& cfg, std::string problem, double alpha, int M, int N,
                  const std::string& out) {
    const auto p = build_problem(cfg, problem, alpha);
    const auto report = guarded_compute([&] {
        const auto mesh = tfbs::Mesh::make(p, M, N);
        const auto w = tfbs::make_weight_matrices(M);
        const auto l1 = tfbs::l1_weights(alpha, N, mesh.dt);
        return tfbs::check_stability(p, mesh, w, l1.d);
    });
    std::cout << tfbs::stability_text(report);
    if (!out.empty()) {
        ensure_dir(out);
        guarded_io([&] {
            std::ofstream js(out + "/stability.json");
            if (!js) throw CliError{3, "cannot open for writing: " + out + "/stability.json"};
            js << tfbs::stability_json(report).dump(2) << "\n";
        });
    }
    return 0;
}

// ---------------------------------------------------------------- weights

int cmd_weights(int M, const std::string& out) {
    const auto A = guarded_compute([&] { return tfbs::assemble_A(M); });
    const auto B = tfbs::assemble_B(M);
    const auto w = guarded_compute([&] { return tfbs::make_weight_matrices(M); });
    ensure_dir(out);
    guarded_io([&] {
        tfbs::write_matrix_csv(A, out + "/A.csv");
        tfbs::write_matrix_csv(B, out + "/B.csv");
        tfbs::write_matrix_csv(w.X, out + "/X.csv");
        tfbs::write_matrix_csv(w.Y, out + "/Y.csv");
    });
    double max_rowsum = 0.0;
    for (int i = 0; i <= M; ++i) {
        double s = 0.0;
        for (int j = 0; j <= M; ++j) s += w.X(i, j);
        max_rowsum = std::max(max_rowsum, std::abs(s));
    }
    std::cout << "M=" << M << " max |X row sum| = " << tfbs::format_sci(max_rowsum) << "\n";
    return 0;
}

// ---------------------------------------------------------------- compare-golden

struct TableRecipe {
    std::string problem;
    tfbs::Scheme scheme;
};

TableRecipe recipe_for(const std::string& table) {
    if (table == "table2" || table == "table3") return {"example1", tfbs::Scheme::dqm};
    if (table == "table4" || table == "table5") return {"example2", tfbs::Scheme::dqm};
    if (table == "fdm-table") return {"example1", tfbs::Scheme::fdm};
    throw CliError{1, "unknown golden table: " + table};
}

int cmd_compare_golden(const std::string& table, const std::string& golden_dir, double value_tol,
                       double order_tol, int max_level, const std::string& out) {
    const auto recipe = recipe_for(table);
    std::vector<tfbs::GoldenRow> golden;
    guarded_io([&] { golden = tfbs::load_golden_csv(golden_dir + "/" + table + ".csv"); });

    // Schedule and alpha blocks come from the golden file itself.
    std::vector<double> alphas;
    std::vector<std::pair<int, int>> schedule;
    for (const auto& g : golden) {
        if (max_level >= 0 && g.level > max_level) continue;
        if (alphas.empty() || std::abs(alphas.back() - g.alpha) > 1e-12) {
            bool seen = false;
            for (double a : alphas) seen = seen || std::abs(a - g.alpha) < 1e-12;
            if (!seen) alphas.push_back(g.alpha);
        }
        std::pair<int, int> mn{g.M, g.N};
        bool seen = false;
        for (const auto& s : schedule) seen = seen || s == mn;
        if (!seen) schedule.push_back(mn);
    }
    if (schedule.empty()) throw CliError{1, "golden table has no rows at the requested levels"};
    const bool temporal = tfbs::schedule_is_temporal(table);

    tfbs::SweepOptions opt;
    opt.scheme = recipe.scheme;
    std::vector<tfbs::ConvergenceTable> computed;
    for (double alpha : alphas) {
        const auto p = tfbs::make_problem(recipe.problem, alpha);
        computed.push_back(guarded_compute([&] {
            return temporal ? tfbs::temporal_sweep(p, schedule, opt)
                            : tfbs::spatial_sweep(p, schedule, opt);
        }));
    }

    const auto cmp = tfbs::compare_to_golden(table, golden, computed, value_tol, order_tol);
    for (const auto& c : cmp.cells) {
        std::cout << table << " alpha=" << c.alpha << " level=" << c.level << " " << c.metric
                  << ": golden=" << tfbs::format_sci(c.golden)
                  << " computed=" << tfbs::format_sci(c.computed)
                  << " deviation=" << tfbs::format_sci(c.deviation) << " "
                  << (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"));
        if (!c.note.empty() && c.skipped) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (cmp.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    if (!out.empty()) {
        ensure_dir(out);
        guarded_io([&] {
            std::ofstream js(out + "/compare_" + table + ".json");
            if (!js)
                throw CliError{3, "cannot open for writing: " + out + "/compare_" + table + ".json"};
            js << tfbs::comparison_json(cmp).dump(2) << "\n";
        });
    }
    return cmp.all_pass() ? 0 : 2;
}

// ---------------------------------------------------------------- plot-data

int cmd_plot_data(const json& cfg, std::string problem, double alpha, int M, int N,
                  const std::string& scheme_s, const std::string& out) {
    const auto scheme = parse_scheme(scheme_s);
    const auto p = build_problem(cfg, problem, alpha);
    const auto hist =
        guarded_compute([&] { return tfbs::solve_problem(p, M, N, scheme); });
    ensure_dir(out);
    guarded_io([&] {
        tfbs::write_curve_csv(hist, p, out + "/curve.csv");
        tfbs::write_surface_csv(hist, p, out + "/surface.csv");
    });
    std::cout << "wrote " << out << "/curve.csv and " << out << "/surface.csv\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-fractional Black-Scholes solver (L1 + cubic-B-spline DQM)"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --config after the subcommand name

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);

    // Shared option state (defaults match the reference configuration).
    std::string problem = "example1";
    std::string alphas = "0.5";
    double alpha = 0.5;
    int M = 10, N = 10;
    std::string scheme = "dqm";
    std::string boundary = "collocated";
    std::string measure = "final";
    std::string schedule = "table2";
    bool verbatim = false;
    std::string out;
    std::string table = "table2";
    std::string golden_dir = "data/golden";
    double value_tol = 0.15;
    double order_tol = 0.3;
    int max_level = -1;

    auto* solve = app.add_subcommand("solve", "Single run; summary JSON to stdout");
    auto* o_problem = solve->add_option("--problem", problem, "Registry key or 'custom'");
    auto* o_alpha = solve->add_option("--alpha", alpha, "Fractional order in (0, 1]");
    auto* o_M = solve->add_option("--M", M, "Space intervals");
    auto* o_N = solve->add_option("--N", N, "Time steps");
    auto* o_scheme = solve->add_option("--scheme", scheme, "dqm | fdm");
    auto* o_boundary =
        solve->add_option("--boundary", boundary, "collocated | dirichlet-rows");
    auto* o_measure = solve->add_option("--measure-time", measure, "final | max");
    auto* o_verbatim = solve->add_flag("--paper-verbatim-history", verbatim,
                                       "Drop the delta_k factor on the initial layer");
    auto* o_out = solve->add_option("--out", out, "Output directory (optional)");

    auto* conv = app.add_subcommand("convergence", "Refinement sweep; tables to stdout/CSV");
    auto* c_problem = conv->add_option("--problem", problem, "Registry key or 'custom'");
    auto* c_alphas = conv->add_option("--alpha", alphas, "Comma-separated alpha list");
    auto* c_schedule =
        conv->add_option("--schedule", schedule, "Named (table2..table5, fdm-table) or M:N,...");
    auto* c_scheme = conv->add_option("--scheme", scheme, "dqm | fdm");
    auto* c_boundary = conv->add_option("--boundary", boundary, "collocated | dirichlet-rows");
    auto* c_measure = conv->add_option("--measure-time", measure, "final | max");
    auto* c_verbatim = conv->add_flag("--paper-verbatim-history", verbatim,
                                      "Drop the delta_k factor on the initial layer");
    auto* c_out = conv->add_option("--out", out, "Output directory (optional)");

    auto* stab = app.add_subcommand("stability", "Norm-bound report (text + JSON)");
    auto* s_problem = stab->add_option("--problem", problem, "Registry key or 'custom'");
    auto* s_alpha = stab->add_option("--alpha", alpha, "Fractional order in (0, 1]");
    auto* s_M = stab->add_option("--M", M, "Space intervals");
    auto* s_N = stab->add_option("--N", N, "Time steps");
    auto* s_out = stab->add_option("--out", out, "Output directory (optional)");

    auto* wts = app.add_subcommand("weights", "Dump A, B, X, Y as CSV");
    int wM = 12;
    wts->add_option("--M", wM, "Space intervals");
    std::string wout = "weights-out";
    wts->add_option("--out", wout, "Output directory");
    wts->add_flag("--dump", "Accepted for compatibility; dumping is the default");

    auto* cg = app.add_subcommand("compare-golden", "Recompute a table and diff against golden");
    auto* g_table =
        cg->add_option("--table", table, "table2 | table3 | table4 | table5 | fdm-table");
    auto* g_dir = cg->add_option("--golden-dir", golden_dir, "Golden CSV directory");
    auto* g_vtol = cg->add_option("--value-tol", value_tol, "Relative value tolerance");
    auto* g_otol = cg->add_option("--order-tol", order_tol, "Absolute order tolerance");
    auto* g_maxl = cg->add_option("--max-level", max_level, "Highest level to recompute (-1 = all)");
    auto* g_out = cg->add_option("--out", out, "Output directory (optional)");

    auto* plot = app.add_subcommand("plot-data", "Curve and surface CSVs for plotting");
    auto* p_problem = plot->add_option("--problem", problem, "Registry key or 'custom'");
    auto* p_alpha = plot->add_option("--alpha", alpha, "Fractional order in (0, 1]");
    auto* p_M = plot->add_option("--M", M, "Space intervals");
    auto* p_N = plot->add_option("--N", N, "Time steps");
    auto* p_scheme = plot->add_option("--scheme", scheme, "dqm | fdm");
    std::string pout = "plot-out";
    plot->add_option("--out", pout, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        json cfg = json::object();
        if (!config_path.empty()) cfg = load_config(config_path);

        if (solve->parsed()) {
            apply_config(o_problem, cfg, "problem", problem);
            apply_config(o_alpha, cfg, "alpha", alpha);
            apply_config(o_M, cfg, "M", M);
            apply_config(o_N, cfg, "N", N);
            apply_config(o_scheme, cfg, "scheme", scheme);
            apply_config(o_boundary, cfg, "boundary", boundary);
            apply_config(o_measure, cfg, "measure_time", measure);
            apply_config(o_verbatim, cfg, "paper_verbatim_history", verbatim);
            apply_config(o_out, cfg, "out", out);
            return cmd_solve(cfg, problem, alpha, M, N, scheme, boundary, measure, verbatim, out);
        }
        if (conv->parsed()) {
            apply_config(c_problem, cfg, "problem", problem);
            apply_config(c_alphas, cfg, "alpha_list", alphas);
            apply_config(c_schedule, cfg, "schedule", schedule);
            apply_config(c_scheme, cfg, "scheme", scheme);
            apply_config(c_boundary, cfg, "boundary", boundary);
            apply_config(c_measure, cfg, "measure_time", measure);
            apply_config(c_verbatim, cfg, "paper_verbatim_history", verbatim);
            apply_config(c_out, cfg, "out", out);
            return cmd_convergence(cfg, problem, alphas, schedule, scheme, boundary, measure,
                                   verbatim, out);
        }
        if (stab->parsed()) {
            apply_config(s_problem, cfg, "problem", problem);
            apply_config(s_alpha, cfg, "alpha", alpha);
            apply_config(s_M, cfg, "M", M);
            apply_config(s_N, cfg, "N", N);
            apply_config(s_out, cfg, "out", out);
            return cmd_stability(cfg, problem, alpha, M, N, out);
        }
        if (wts->parsed()) return cmd_weights(wM, wout);
        if (cg->parsed()) {
            apply_config(g_table, cfg, "table", table);
            apply_config(g_dir, cfg, "golden_dir", golden_dir);
            apply_config(g_vtol, cfg, "value_tol", value_tol);
            apply_config(g_otol, cfg, "order_tol", order_tol);
            apply_config(g_maxl, cfg, "max_level", max_level);
            apply_config(g_out, cfg, "out", out);
            return cmd_compare_golden(table, golden_dir, value_tol, order_tol, max_level, out);
        }
        if (plot->parsed()) {
            apply_config(p_problem, cfg, "problem", problem);
            apply_config(p_alpha, cfg, "alpha", alpha);
            apply_config(p_M, cfg, "M", M);
            apply_config(p_N, cfg, "N", N);
            apply_config(p_scheme, cfg, "scheme", scheme);
            return cmd_plot_data(cfg, problem, alpha, M, N, scheme, pout);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return e.code;
    } catch (const tfbs::SingularMatrixError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
