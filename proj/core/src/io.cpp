#include "tfbs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tfbs {

using nlohmann::json;

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

void write_history_csv(const SolutionHistory& hist, const std::string& path) {
    auto out = open_out(path);
    out << "step,node,s,eta,value\n";
    for (int k = 0; k <= hist.mesh.N; ++k) {
        const double eta = k * hist.mesh.dt;
        for (int i = 0; i <= hist.mesh.M; ++i)
            out << k << ',' << i << ',' << format_sci(hist.mesh.nodes[i]) << ','
                << format_sci(eta) << ',' << format_sci(hist.u[k][i]) << '\n';
    }
}

void write_curve_csv(const SolutionHistory& hist, const ProblemSpec& p, const std::string& path) {
    auto out = open_out(path);
    const bool has_exact = p.exact.has_value();
    out << (has_exact ? "s,numerical,exact\n" : "s,numerical\n");
    const double eta = hist.mesh.N * hist.mesh.dt;
    for (int i = 0; i <= hist.mesh.M; ++i) {
        out << format_sci(hist.mesh.nodes[i]) << ',' << format_sci(hist.u[hist.mesh.N][i]);
        if (has_exact) out << ',' << format_sci((*p.exact)(hist.mesh.nodes[i], eta));
        out << '\n';
    }
}

void write_surface_csv(const SolutionHistory& hist, const ProblemSpec& p, const std::string& path) {
    auto out = open_out(path);
    const bool has_exact = p.exact.has_value();
    out << (has_exact ? "s,eta,numerical,exact\n" : "s,eta,numerical\n");
    for (int k = 0; k <= hist.mesh.N; ++k) {
        const double eta = k * hist.mesh.dt;
        for (int i = 0; i <= hist.mesh.M; ++i) {
            out << format_sci(hist.mesh.nodes[i]) << ',' << format_sci(eta) << ','
                << format_sci(hist.u[k][i]);
            if (has_exact) out << ',' << format_sci((*p.exact)(hist.mesh.nodes[i], eta));
            out << '\n';
        }
    }
}

void write_matrix_csv(const DenseMatrix& m, const std::string& path) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_sci(m(i, j));
        }
        out << '\n';
    }
}

void write_table_csv(const ConvergenceTable& table, const std::string& path) {
    auto out = open_out(path);
    out << "level,M,N,l2,oc_l2,linf,oc_linf,l2_scaled,status\n";
    for (const auto& r : table.rows) {
        out << r.level << ',' << r.M << ',' << r.N << ',';
        if (r.failed) {
            out << ",,,,,failed\n";
            continue;
        }
        out << format_sci(r.l2_nodal) << ',' << (r.has_order ? format_sci(r.oc_l2) : "") << ','
            << format_sci(r.linf) << ',' << (r.has_order ? format_sci(r.oc_linf) : "") << ','
            << format_sci(r.l2) << ",ok\n";
    }
}

json summary_json(const SolutionHistory& hist, const ProblemSpec& p,
                  const std::optional<ErrorReport>& errors) {
    json j;
    j["problem"] = hist.problem_id;
    j["scheme"] = to_string(hist.scheme);
    j["boundary"] = to_string(hist.boundary);
    j["alpha"] = hist.alpha;
    j["M"] = hist.mesh.M;
    j["N"] = hist.mesh.N;
    j["h"] = hist.mesh.h;
    j["dt"] = hist.mesh.dt;
    j["domain"] = {p.domain_lo, p.domain_hi};
    j["horizon"] = p.horizon;
    if (errors) {
        j["errors"] = {{"l2", errors->l2},
                       {"l2_nodal", errors->l2_nodal},
                       {"linf", errors->linf}};
    }
    return j;
}

json table_json(const ConvergenceTable& table) {
    json j;
    j["axis"] = table.axis;
    j["problem"] = table.problem_id;
    j["alpha"] = table.alpha;
    j["scheme"] = to_string(table.scheme);
    j["rows"] = json::array();
    for (const auto& r : table.rows) {
        json row = {{"level", r.level}, {"M", r.M}, {"N", r.N}, {"failed", r.failed}};
        if (!r.failed) {
            row["l2"] = r.l2_nodal;
            row["l2_scaled"] = r.l2;
            row["linf"] = r.linf;
            if (r.has_order) {
                row["oc_l2"] = r.oc_l2;
                row["oc_linf"] = r.oc_linf;
            }
        }
        j["rows"].push_back(row);
    }
    return j;
}

json stability_json(const StabilityReport& r) {
    json j;
    j["alpha"] = r.alpha;
    j["M"] = r.M;
    j["N"] = r.N;
    j["d"] = r.d;
    j["beta"] = r.beta;
    j["R_X"] = r.R_X;
    j["R_Y"] = r.R_Y;
    j["P_norm"] = r.P_norm;
    j["P_bound"] = r.P_bound;
    j["threshold"] = r.threshold;
    j["Q_norm"] = r.Q_norm;
    j["condition_ok"] = r.condition_ok;
    if (r.condition_ok) j["theoretical_bound"] = r.theoretical_bound;
    if (r.empirical_inverse_norm) j["empirical_inverse_norm"] = *r.empirical_inverse_norm;
    if (r.empirical_inverse_norm_dirichlet)
        j["empirical_inverse_norm_dirichlet"] = *r.empirical_inverse_norm_dirichlet;
    return j;
}

std::string stability_text(const StabilityReport& r) {
    std::ostringstream out;
    out << "stability report  alpha=" << r.alpha << "  M=" << r.M << "  N=" << r.N << '\n'
        << "  d                 = " << format_sci(r.d) << '\n'
        << "  beta (Varah)      = " << format_sci(r.beta) << '\n'
        << "  R_X / R_Y         = " << format_sci(r.R_X) << " / " << format_sci(r.R_Y) << '\n'
        << "  ||P||_inf         = " << format_sci(r.P_norm)
        << "   (bound " << format_sci(r.P_bound) << ")\n"
        << "  1 + c d           = " << format_sci(r.threshold) << '\n'
        << "  ||Q||_inf         = " << format_sci(r.Q_norm) << '\n'
        << "  condition d||P|| < 1+cd : " << (r.condition_ok ? "holds" : "VIOLATED") << '\n';
    if (r.condition_ok)
        out << "  ||L^-1|| bound    = " << format_sci(r.theoretical_bound) << '\n';
    if (r.empirical_inverse_norm)
        out << "  ||L^-1|| empirical= " << format_sci(*r.empirical_inverse_norm) << '\n';
    if (r.empirical_inverse_norm_dirichlet)
        out << "  ||L^-1|| dirichlet= " << format_sci(*r.empirical_inverse_norm_dirichlet) << '\n';
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::vector<GoldenRow> load_golden_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table: " + path);
    std::vector<GoldenRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() < 13) throw std::runtime_error("golden table: malformed row in " + path);
        GoldenRow r;
        r.alpha = std::stod(f[0]);
        r.level = std::stoi(f[1]);
        r.M = std::stoi(f[2]);
        r.N = std::stoi(f[3]);
        r.l2 = std::stod(f[4]);
        if (!f[5].empty()) r.oc_l2 = std::stod(f[5]);
        r.linf = std::stod(f[6]);
        if (!f[7].empty()) r.oc_linf = std::stod(f[7]);
        r.l2_skip = f[8] == "1";
        r.linf_skip = f[9] == "1";
        r.oc_l2_skip = f[10] == "1";
        r.oc_linf_skip = f[11] == "1";
        r.note = f[12];
        rows.push_back(r);
    }
    return rows;
}

bool GoldenComparison::all_pass() const {
    for (const auto& c : cells)
        if (!c.skipped && !c.pass) return false;
    return true;
}

GoldenComparison compare_to_golden(const std::string& table_name,
                                   const std::vector<GoldenRow>& golden,
                                   const std::vector<ConvergenceTable>& computed,
                                   double value_tol, double order_tol) {
    GoldenComparison cmp;
    cmp.table = table_name;
    cmp.values_checked = !(table_name == "table3" || table_name == "table5");
    cmp.value_tol = value_tol;
    cmp.order_tol = order_tol;

    auto find_row = [&](double alpha, int level) -> const ConvergenceRow* {
        for (const auto& t : computed) {
            if (std::abs(t.alpha - alpha) > 1e-12) continue;
            for (const auto& r : t.rows)
                if (r.level == level && !r.failed) return &r;
        }
        return nullptr;
    };

    for (const auto& g : golden) {
        const ConvergenceRow* r = find_row(g.alpha, g.level);
        auto push = [&](const std::string& metric, double gold, double comp, bool is_order,
                        bool skip, const std::string& note) {
            GoldenCellResult c;
            c.alpha = g.alpha;
            c.level = g.level;
            c.metric = metric;
            c.golden = gold;
            c.computed = comp;
            c.deviation = is_order ? std::abs(comp - gold) : std::abs(comp - gold) / std::abs(gold);
            c.skipped = skip || r == nullptr;
            c.pass = !c.skipped && c.deviation <= (is_order ? order_tol : value_tol);
            c.note = note;
            cmp.cells.push_back(c);
        };
        const double comp_l2 = r ? r->l2_nodal : 0.0;
        const double comp_linf = r ? r->linf : 0.0;
        if (cmp.values_checked) {
            push("l2", g.l2, comp_l2, false, g.l2_skip, g.note);
            push("linf", g.linf, comp_linf, false, g.linf_skip, g.note);
        }
        if (g.oc_l2)
            push("oc_l2", *g.oc_l2, r && r->has_order ? r->oc_l2 : 0.0, true,
                 g.oc_l2_skip || (r && !r->has_order), g.note);
        if (g.oc_linf)
            push("oc_linf", *g.oc_linf, r && r->has_order ? r->oc_linf : 0.0, true,
                 g.oc_linf_skip || (r && !r->has_order), g.note);
    }
    return cmp;
}

json comparison_json(const GoldenComparison& cmp) {
    json j;
    j["table"] = cmp.table;
    j["values_checked"] = cmp.values_checked;
    j["value_tol"] = cmp.value_tol;
    j["order_tol"] = cmp.order_tol;
    j["all_pass"] = cmp.all_pass();
    j["cells"] = json::array();
    for (const auto& c : cmp.cells) {
        j["cells"].push_back({{"alpha", c.alpha},
                              {"level", c.level},
                              {"metric", c.metric},
                              {"golden", c.golden},
                              {"computed", c.computed},
                              {"deviation", c.deviation},
                              {"skipped", c.skipped},
                              {"pass", c.pass},
                              {"note", c.note}});
    }
    return j;
}

GoldenComparison comparison_from_json(const json& j) {
    GoldenComparison cmp;
    cmp.table = j.at("table").get<std::string>();
    cmp.values_checked = j.at("values_checked").get<bool>();
    cmp.value_tol = j.at("value_tol").get<double>();
    cmp.order_tol = j.at("order_tol").get<double>();
    for (const auto& cj : j.at("cells")) {
        GoldenCellResult c;
        c.alpha = cj.at("alpha").get<double>();
        c.level = cj.at("level").get<int>();
        c.metric = cj.at("metric").get<std::string>();
        c.golden = cj.at("golden").get<double>();
        c.computed = cj.at("computed").get<double>();
        c.deviation = cj.at("deviation").get<double>();
        c.skipped = cj.at("skipped").get<bool>();
        c.pass = cj.at("pass").get<bool>();
        c.note = cj.at("note").get<std::string>();
        cmp.cells.push_back(c);
    }
    return cmp;
}

namespace {

// Polynomial given as coefficient list [c0, c1, ...].
double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

std::vector<double> poly_from(const json& j) { return j.get<std::vector<double>>(); }

}  // namespace

ProblemSpec problem_from_config(const json& cfg, double alpha) {
    const std::string key = cfg.value("problem", "example1");
    if (key != "custom") return make_problem(key, alpha);

    ProblemSpec p;
    p.id = "custom";
    p.coeffs = Coefficients{cfg.at("a").get<double>(), cfg.at("b").get<double>(),
                            cfg.at("c").get<double>(), alpha};
    const auto dom = cfg.at("domain").get<std::vector<double>>();
    if (dom.size() != 2) throw std::invalid_argument("custom problem: domain must be [lo, hi]");
    p.domain_lo = dom[0];
    p.domain_hi = dom[1];
    p.horizon = cfg.at("T").get<double>();

    const auto initial = poly_from(cfg.at("initial"));
    const auto left = poly_from(cfg.at("left_bc"));
    const auto right = poly_from(cfg.at("right_bc"));
    p.initial = [initial](double s) { return poly_eval(initial, s); };
    p.left_bc = [left](double eta) { return poly_eval(left, eta); };
    p.right_bc = [right](double eta) { return poly_eval(right, eta); };

    // Source (and optional exact) as sums of separable s-poly * eta-poly terms.
    auto field_from = [](const json& terms) -> FieldFn {
        std::vector<std::pair<std::vector<double>, std::vector<double>>> parts;
        for (const auto& t : terms)
            parts.emplace_back(poly_from(t.at("s")), poly_from(t.at("eta")));
        return [parts](double s, double eta) {
            double v = 0.0;
            for (const auto& [ps, pe] : parts) v += poly_eval(ps, s) * poly_eval(pe, eta);
            return v;
        };
    };
    p.source = cfg.contains("source_terms") ? field_from(cfg.at("source_terms"))
                                            : FieldFn([](double, double) { return 0.0; });
    if (cfg.contains("exact_terms")) p.exact = field_from(cfg.at("exact_terms"));
    return p;
}

}  // namespace tfbs
