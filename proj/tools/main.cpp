#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cigrid/decompose.hpp"
#include "cigrid/degree.hpp"
#include "cigrid/grid.hpp"
#include "cigrid/ideals.hpp"
#include "cigrid/json_io.hpp"
#include "cigrid/matroid.hpp"
#include "cigrid/oracle.hpp"

namespace {

using namespace cigrid;

struct CommonOpts {
    std::string format;
    std::string output;
};

std::string default_format() {
    const char* env = std::getenv("CIGRID_FORMAT");
    if (!env || !*env) return "json";
    return env;
}

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--format", opts.format, "output format (default json, or $CIGRID_FORMAT)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", opts.output, "write the payload to this file instead of stdout");
}

void validate_format(const CommonOpts& opts) {
    if (opts.format != "json" && opts.format != "csv" && opts.format != "text") {
        throw std::invalid_argument("unknown output format '" + opts.format +
                                    "' (expected json, csv, or text)");
    }
}

void write_out(const CommonOpts& opts, const std::string& payload) {
    if (opts.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + opts.output);
    file << payload;
}

std::string render(const CommonOpts& opts, const Json& j, const std::string& text) {
    validate_format(opts);
    if (opts.format == "json") return render_json(j);
    if (opts.format == "csv") return json_to_csv(j);
    return text;
}

std::string js_to_string(const std::vector<unsigned>& js) {
    std::string out = "{";
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(js[i]);
    }
    return out + "}";
}

// One representative admissible subset per (u, v): row-1 zeros in columns
// 1..u, row-2 zeros in columns u+1..u+v.  maximal_js depends only on the
// type, so the representative speaks for the whole class.
SubsetS representative_of_type(const GridShape& g, unsigned u, unsigned v) {
    std::vector<unsigned> cells;
    for (unsigned c = 1; c <= u; ++c) cells.push_back(2 * c - 1);
    for (unsigned c = u + 1; c <= u + v; ++c) cells.push_back(2 * c);
    return make_subset(g, std::move(cells));
}

Json types_json(const GridShape& g) {
    Json arr = Json::array();
    const unsigned cap = g.l - (g.t - 1);
    for (unsigned u = 0; u <= cap; ++u) {
        for (unsigned v = 0; v <= cap; ++v) {
            if (u + v == 0 || u + v > g.l) continue;
            SubsetS rep = representative_of_type(g, u, v);
            const Int count = binomial(g.l, static_cast<long>(u)) *
                              binomial(g.l - u, static_cast<long>(v));
            Json entry;
            entry["u"] = u;
            entry["v"] = v;
            entry["subset_count"] = count.get_ui();
            entry["maximal_js"] = maximal_js(g, rep);
            arr.push_back(std::move(entry));
        }
    }
    return arr;
}

GridShape shape_from_flags(unsigned k, unsigned l, unsigned t, unsigned d, unsigned s) {
    GridShape g;
    g.k = k;
    g.l = l;
    g.t = t;
    g.d = d;
    g.s = s;
    g.validate();
    return g;
}

int cmd_decompose(const CommonOpts& opts, const GridShape& g, bool summary) {
    DecompositionReport report = decompose(g);
    Json out = summary ? report_summary_json(report) : report_json(report);
    const bool k2 = g.k == 2 && g.d >= g.t;
    std::ostringstream text;
    text << "V_Delta decomposition for k=" << g.k << " l=" << g.l << " t=" << g.t
         << " d=" << g.d << " s=" << g.s << "\n";
    text << "components: " << report.components.size() << "\n";
    text << "dim V_Delta: " << report.dim_V_Delta << "\n";
    if (k2) {
        if (summary) {
            TopComponents top = top_dimensional_components(g);
            Json tj;
            Json types = Json::array();
            for (auto [u, v] : top.types) types.push_back(Json::array({u, v}));
            tj["types"] = std::move(types);
            tj["j0"] = top.j0;
            tj["include_V_empty"] = top.include_V_empty;
            tj["s_family_top"] = top.s_family_top;
            out["top"] = std::move(tj);
            text << "top types (u,v):";
            for (auto [u, v] : top.types) text << " (" << u << "," << v << ")";
            text << " at j0=" << top.j0 << "; V_empty on top: "
                 << (top.include_V_empty ? "yes" : "no") << "\n";
        } else {
            out["types"] = types_json(g);
            for (const Json& entry : out["types"]) {
                std::vector<unsigned> js = entry["maximal_js"].get<std::vector<unsigned>>();
                text << "type (" << entry["u"] << "," << entry["v"] << "): "
                     << entry["subset_count"] << " subsets, maximal j "
                     << js_to_string(js) << "\n";
            }
        }
    }
    write_out(opts, render(opts, out, text.str()));
    return 0;
}

int cmd_dimension(const CommonOpts& opts, const GridShape& g) {
    g.validate_decomposition();
    Json out;
    out["shape"] = shape_json(g);
    const unsigned long dim_empty = dim_V_empty(g);
    unsigned long dim = 0;
    std::string source;
    bool crossed = false;
    if (g.k == 2 && g.d >= g.t) {
        dim = dim_V_Delta_formula(g);
        source = "formula";
        if (g.l <= 12) {
            decompose_k2(g);  // throws CrossCheckError if the formula disagrees
            crossed = true;
        }
    } else {
        // t = l: max over the closed-form component dimensions
        dim = dim_empty;
        unsigned long nonconstant = 1;
        for (unsigned i = 0; i < g.k && nonconstant <= 100000; ++i) nonconstant *= g.l;
        if (g.k >= 2 && g.l >= 2) {
            std::vector<unsigned> cells;
            for (unsigned i = 1; i < g.k; ++i) cells.push_back(cell_index(g, i, 1));
            cells.push_back(cell_index(g, g.k, 2));
            SubsetS rep = make_subset(g, std::move(cells));
            const unsigned long dim_s = dim_V_S_teql(g, rep);
            if (dim_s > dim) dim = dim_s;
        }
        source = "components";
        if (nonconstant <= 100000) {
            DecompositionReport report = decompose_t_eq_l(g);
            if (report.dim_V_Delta != dim) {
                throw CrossCheckError("dimension: closed forms give " + std::to_string(dim) +
                                      " but enumeration gives " +
                                      std::to_string(report.dim_V_Delta));
            }
            crossed = true;
        }
    }
    out["dim_V_Delta"] = dim;
    out["dim_V_empty"] = dim_empty;
    out["source"] = source;
    out["cross_checked"] = crossed;
    std::ostringstream text;
    text << "dim V_Delta = " << dim << " (k=" << g.k << " l=" << g.l << " t=" << g.t
         << " d=" << g.d << ", " << source << (crossed ? ", cross-checked" : "") << ")\n";
    write_out(opts, render(opts, out, text.str()));
    return 0;
}

int cmd_degree(const CommonOpts& opts, unsigned d, unsigned l, unsigned t,
               const std::string& of, const std::string& method, bool force) {
    if (of == "V_Delta") {
        DegreeReport report = deg_V_Delta(d, l, t);
        Json out = degree_report_json(report);
        std::ostringstream text;
        text << "deg V_Delta(d=" << d << ", l=" << l << ", t=" << t
             << ") = " << report.deg_V_Delta.get_str() << " [case " << report.case_label
             << "]\n";
        write_out(opts, render(opts, out, text.str()));
        return 0;
    }
    const bool exhaustive = method == "paths" || method == "transversal" || method == "all";
    if (exhaustive && d * l > 30 && !force) {
        throw std::invalid_argument(
            "refusing exhaustive enumeration for d*l > 30; pass --force to override");
    }
    std::vector<std::pair<std::string, Int>> values;
    if (method == "lgv" || method == "all") {
        values.emplace_back("lgv", deg_V_empty(d, l, t));
    }
    if (method == "paths" || method == "all") {
        Int total = 0;
        for (const PathFamily& f : enumerate_path_families(d, l, t)) {
            total += family_weight(f);
        }
        values.emplace_back("paths", total);
    }
    if (method == "transversal" || method == "all") {
        Int total = 0;
        for (const auto& tv : minimal_transversals(hypergraph_A(d, l, t))) {
            std::vector<GridCell> cells;
            for (unsigned v : tv) cells.push_back(vertex_to_cell(l, v));
            total += multiplicity_m(d, l, cells);
        }
        values.emplace_back("transversal_mA", total);
        values.emplace_back(
            "transversal_minB",
            Int(static_cast<unsigned long>(minimal_transversals(hypergraph_B(d, l, t)).size())));
    }
    if (method == "closed" || (method == "all" && d == t)) {
        if (d != t) {
            throw std::invalid_argument("the closed form requires d = t");
        }
        values.emplace_back("closed", deg_V_empty_closed_form(d, l));
    }
    bool agree = true;
    for (const auto& [name, value] : values) {
        if (value != values.front().second) agree = false;
    }
    if (!agree) {
        std::string msg = "degree methods disagree:";
        for (const auto& [name, value] : values) msg += " " + name + "=" + value.get_str();
        throw CrossCheckError(msg);
    }
    Json out;
    out["d"] = d;
    out["l"] = l;
    out["t"] = t;
    out["of"] = "V_empty";
    Json methods;
    for (const auto& [name, value] : values) methods[name] = int_json(value);
    out["methods"] = std::move(methods);
    out["deg_V_empty"] = int_json(values.front().second);
    out["agree"] = agree;
    std::ostringstream text;
    text << "deg V_empty(d=" << d << ", l=" << l << ", t=" << t
         << ") = " << values.front().second.get_str() << " [";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text << ", ";
        text << values[i].first;
    }
    text << "]\n";
    write_out(opts, render(opts, out, text.str()));
    return 0;
}

int cmd_transversals(const CommonOpts& opts, unsigned d, unsigned l, unsigned t,
                     const std::string& hg, std::size_t limit, bool count_only, bool force) {
    if (d * l > 30 && !force) {
        throw std::invalid_argument(
            "refusing exhaustive enumeration for d*l > 30; pass --force to override");
    }
    const Hypergraph h = hg == "A" ? hypergraph_A(d, l, t) : hypergraph_B(d, l, t);
    const unsigned ncols = hg == "A" ? l : 2 * l;
    const auto transversals = minimal_transversals(h);
    bool uniform = true;
    for (const auto& tv : transversals) {
        if (tv.size() != transversals.front().size()) uniform = false;
    }
    Json out;
    out["d"] = d;
    out["l"] = l;
    out["t"] = t;
    out["hypergraph"] = hg;
    out["vertex_count"] = h.vertex_count;
    out["edge_count"] = h.edges.size();
    out["count"] = transversals.size();
    out["size"] = uniform && !transversals.empty() ? Json(transversals.front().size())
                                                   : Json(nullptr);
    if (!count_only) {
        Json list = Json::array();
        for (const auto& tv : transversals) {
            if (limit && list.size() >= limit) break;
            std::vector<GridCell> cells;
            for (unsigned v : tv) cells.push_back(vertex_to_cell(ncols, v));
            list.push_back(cells_json(cells));
        }
        out["truncated"] = limit && transversals.size() > limit;
        out["transversals"] = std::move(list);
    }
    std::ostringstream text;
    text << "minimal transversals of " << (hg == "A" ? "A_t" : "B (doubled grid)")
         << " for d=" << d << " l=" << l << " t=" << t << ": " << transversals.size();
    if (uniform && !transversals.empty()) {
        text << ", uniform size " << transversals.front().size();
    }
    text << "\n";
    write_out(opts, render(opts, out, text.str()));
    return 0;
}

int cmd_paths(const CommonOpts& opts, unsigned d, unsigned l, unsigned t, std::size_t limit,
              bool count_only, bool force) {
    if (d * l > 30 && !force) {
        throw std::invalid_argument(
            "refusing exhaustive enumeration for d*l > 30; pass --force to override");
    }
    const auto families = enumerate_path_families(d, l, t);
    Int total = 0;
    for (const PathFamily& f : families) total += family_weight(f);
    Json out;
    out["d"] = d;
    out["l"] = l;
    out["t"] = t;
    out["count"] = families.size();
    out["total_weight"] = int_json(total);
    if (!count_only) {
        Json list = Json::array();
        for (const PathFamily& f : families) {
            if (limit && list.size() >= limit) break;
            Json fj;
            Json paths = Json::array();
            for (const WSPath& p : f.paths) paths.push_back(cells_json(p.cells));
            fj["paths"] = std::move(paths);
            fj["weight"] = int_json(family_weight(f));
            fj["complement"] = cells_json(complement_of_family(f));
            list.push_back(std::move(fj));
        }
        out["truncated"] = limit && families.size() > limit;
        out["families"] = std::move(list);
    }
    std::ostringstream text;
    text << "non-intersecting WS path families for d=" << d << " l=" << l << " t=" << t
         << ": " << families.size() << ", total weight " << total.get_str() << "\n";
    write_out(opts, render(opts, out, text.str()));
    return 0;
}

int cmd_ideal(const CommonOpts& opts, const GridShape& g, const std::string& target,
              const std::vector<unsigned>& s_cells, bool j_given, unsigned j,
              const std::string& emit) {
    IdealSpec spec;
    if (target == "I") {
        if (s_cells.empty() || !j_given) {
            throw std::invalid_argument("--target I requires --S and --j");
        }
        spec = ideal_I_S_j(g, make_subset(g, s_cells), j);
    } else if (target == "J") {
        if (s_cells.empty()) {
            if (j_given) throw std::invalid_argument("--target J without --S does not take --j");
            spec = ideal_J_empty(g);
        } else {
            if (!j_given) throw std::invalid_argument("--target J with --S requires --j");
            spec = ideal_J_S_j(g, make_subset(g, s_cells), j);
        }
    } else if (target == "initial") {
        if (!s_cells.empty() || j_given) {
            throw std::invalid_argument("--target initial does not take --S or --j");
        }
        spec = ideal_initial_J_empty(g);
    } else if (target == "IDelta") {
        if (!s_cells.empty() || j_given) {
            throw std::invalid_argument("--target IDelta does not take --S or --j");
        }
        spec = ideal_I_Delta(g);
    } else {
        throw std::invalid_argument("unknown --target '" + target +
                                    "' (expected I, J, initial, or IDelta)");
    }
    const std::string dialect = emit == "generators" ? "generators" : "macaulay2";
    const std::string script = emit_cas_script(spec, dialect);
    Json out = ideal_spec_json(spec);
    out["dialect"] = dialect;
    out["script"] = script;
    write_out(opts, render(opts, out, script));
    return 0;
}

int cmd_verify(const CommonOpts& opts, std::vector<std::array<unsigned, 3>> shapes,
               unsigned seeds) {
    if (seeds < 1) throw std::invalid_argument("--seeds must be at least 1");
    Json shape_reports = Json::array();
    unsigned long long total_failures = 0;
    std::ostringstream text;
    for (const auto& [t, d, l] : shapes) {
        GridShape g = shape_from_flags(2, l, t, d, 2);
        g.validate_decomposition();
        unsigned long subsets = 0, pairs = 0, checks = 0, failures = 0;
        for (const SubsetS& S : enumerate_admissible(g)) {
            if (S.empty()) continue;
            ++subsets;
            for (unsigned j : maximal_js(g, S)) {
                ++pairs;
                const IdealSpec spec_I = ideal_I_S_j(g, S, j);
                const IdealSpec spec_J = ideal_J_S_j(g, S, j);
                for (unsigned seed = 1; seed <= seeds; ++seed) {
                    ++checks;
                    try {
                        VectorConfig gamma = sample_phi(g, S, j, seed);
                        bool ok = in_F_S_j(g, gamma, S, j) && check_vanishing(gamma, spec_I);
                        VectorConfig lifted =
                            sample_psi(g, S, gamma, seed ^ 0x9E3779B97F4A7C15ull);
                        ok = ok && in_U_S(g, lifted, S) && check_vanishing(lifted, spec_J);
                        if (!ok) ++failures;
                    } catch (const CrossCheckError&) {
                        ++failures;
                    }
                }
            }
        }
        Json sj;
        sj["t"] = t;
        sj["d"] = d;
        sj["l"] = l;
        sj["admissible_nonempty"] = subsets;
        sj["s_j_pairs"] = pairs;
        sj["checks"] = checks;
        sj["failures"] = failures;
        shape_reports.push_back(std::move(sj));
        total_failures += failures;
        text << "t=" << t << " d=" << d << " l=" << l << ": " << checks << " checks, "
             << failures << " failures\n";
    }
    Json out;
    out["seeds"] = seeds;
    out["shapes"] = std::move(shape_reports);
    out["pass"] = total_failures == 0;
    text << (total_failures == 0 ? "all vanishing checks passed\n"
                                 : "vanishing checks FAILED\n");
    write_out(opts, render(opts, out, text.str()));
    return total_failures == 0 ? 0 : 3;
}

int cmd_quasiproduct(const CommonOpts& opts, unsigned k, unsigned l, unsigned s, unsigned t,
                     unsigned d, bool force) {
    if (k * l > 16 && !force) {
        throw std::invalid_argument(
            "refusing exhaustive matroid checks for k*l > 16; pass --force to override");
    }
    const CircuitFamily circuits = quasi_product_circuits(k, l, s, t, d);
    const bool axioms = verify_circuit_axioms(circuits);
    const MatroidView m = matroid_from_circuits(circuits);
    const std::size_t rank = m.rank_full();
    const GridShape g = shape_from_flags(k, l, t, d, s);
    // the uniform-restriction claim presumes full-rank restrictions
    const bool restrictions_apply = d + 1 >= std::max(s, t);
    Json rows_uniform(nullptr), cols_uniform(nullptr);
    if (restrictions_apply) {
        bool rows_ok = true, cols_ok = true;
        for (unsigned i = 1; i <= k; ++i) {
            rows_ok = rows_ok && restriction_is_uniform(m, row_cells(g, i), t - 1);
        }
        for (unsigned jcol = 1; jcol <= l; ++jcol) {
            cols_ok = cols_ok && restriction_is_uniform(m, column_cells(g, jcol), s - 1);
        }
        rows_uniform = rows_ok;
        cols_uniform = cols_ok;
    }
    const bool pass = axioms && rank == d &&
                      (rows_uniform.is_null() || rows_uniform.get<bool>()) &&
                      (cols_uniform.is_null() || cols_uniform.get<bool>());
    Json out;
    out["k"] = k;
    out["l"] = l;
    out["s"] = s;
    out["t"] = t;
    out["d"] = d;
    out["circuit_count"] = circuits.circuits.size();
    out["axioms_hold"] = axioms;
    out["rank"] = rank;
    out["rank_expected"] = d;
    out["rows_uniform"] = rows_uniform;
    out["cols_uniform"] = cols_uniform;
    out["pass"] = pass;
    std::ostringstream text;
    text << "quasi-product matroid for k=" << k << " l=" << l << " s=" << s << " t=" << t
         << " d=" << d << ": " << circuits.circuits.size() << " circuits, axioms "
         << (axioms ? "hold" : "FAIL") << ", rank " << rank;
    if (restrictions_apply) {
        text << ", rows " << (rows_uniform.get<bool>() ? "uniform" : "NOT uniform")
             << ", columns " << (cols_uniform.get<bool>() ? "uniform" : "NOT uniform");
    }
    text << "\n";
    write_out(opts, render(opts, out, text.str()));
    return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for grid-indexed determinantal varieties: decomposition, "
                 "dimension, degree, and ideal generators of V_Delta"};
    app.require_subcommand(1);

    CommonOpts opts;
    opts.format = default_format();

    // decompose
    auto* sub_decompose = app.add_subcommand(
        "decompose", "enumerate the irreducible components of V_Delta");
    unsigned de_k = 0, de_l = 0, de_t = 0, de_d = 0, de_s = 2;
    bool de_summary = false;
    sub_decompose->add_option("--k", de_k, "grid rows")->required();
    sub_decompose->add_option("--l", de_l, "grid columns")->required();
    sub_decompose->add_option("--t", de_t, "row-minor size")->required();
    sub_decompose->add_option("--d", de_d, "ambient dimension")->required();
    sub_decompose->add_option("--s", de_s, "column-minor size (default 2)");
    sub_decompose->add_flag("--summary", de_summary,
                            "print only the count, dim V_Delta, and top types");
    add_common(sub_decompose, opts);

    // dimension
    auto* sub_dimension =
        app.add_subcommand("dimension", "dim V_Delta by formula with cross-checks");
    unsigned di_k = 0, di_l = 0, di_t = 0, di_d = 0, di_s = 2;
    sub_dimension->add_option("--k", di_k, "grid rows")->required();
    sub_dimension->add_option("--l", di_l, "grid columns")->required();
    sub_dimension->add_option("--t", di_t, "row-minor size")->required();
    sub_dimension->add_option("--d", di_d, "ambient dimension")->required();
    sub_dimension->add_option("--s", di_s, "column-minor size (default 2)");
    add_common(sub_dimension, opts);

    // degree
    auto* sub_degree = app.add_subcommand("degree", "degree of V_empty (or V_Delta)");
    unsigned dg_d = 0, dg_l = 0, dg_t = 0;
    std::string dg_of = "V_empty", dg_method = "lgv";
    bool dg_force = false, dg_json = false;
    sub_degree->add_option("--d", dg_d, "ambient dimension")->required();
    sub_degree->add_option("--l", dg_l, "grid columns")->required();
    sub_degree->add_option("--t", dg_t, "row-minor size")->required();
    sub_degree->add_option("--of", dg_of, "V_empty (default) or V_Delta")
        ->check(CLI::IsMember({"V_empty", "V_Delta"}));
    sub_degree
        ->add_option("--method", dg_method,
                     "lgv | paths | transversal | closed | all (V_empty only)")
        ->check(CLI::IsMember({"lgv", "paths", "transversal", "closed", "all"}));
    sub_degree->add_flag("--json", dg_json, "force JSON output");
    sub_degree->add_flag("--force", dg_force, "lift the d*l cap on exhaustive methods");
    add_common(sub_degree, opts);

    // transversals
    auto* sub_transversals =
        app.add_subcommand("transversals", "minimal transversals of the diagonal hypergraphs");
    unsigned tr_d = 0, tr_l = 0, tr_t = 0;
    std::string tr_hg = "A";
    std::size_t tr_limit = 0;
    bool tr_count_only = false, tr_force = false;
    sub_transversals->add_option("--d", tr_d, "grid rows")->required();
    sub_transversals->add_option("--l", tr_l, "grid columns")->required();
    sub_transversals->add_option("--t", tr_t, "diagonal size")->required();
    sub_transversals->add_option("--hypergraph", tr_hg, "A (d x l) or B (d x 2l)")
        ->check(CLI::IsMember({"A", "B"}));
    sub_transversals->add_option("--limit", tr_limit, "emit at most this many transversals");
    sub_transversals->add_flag("--count-only", tr_count_only, "omit the transversal list");
    sub_transversals->add_flag("--force", tr_force, "lift the d*l cap");
    add_common(sub_transversals, opts);

    // paths
    auto* sub_paths =
        app.add_subcommand("paths", "non-intersecting South/West lattice path families");
    unsigned pa_d = 0, pa_l = 0, pa_t = 0;
    std::size_t pa_limit = 0;
    bool pa_count_only = false, pa_force = false;
    sub_paths->add_option("--d", pa_d, "grid rows")->required();
    sub_paths->add_option("--l", pa_l, "grid columns")->required();
    sub_paths->add_option("--t", pa_t, "family size is t-1")->required();
    sub_paths->add_option("--limit", pa_limit, "emit at most this many families");
    sub_paths->add_flag("--count-only", pa_count_only, "omit the family list");
    sub_paths->add_flag("--force", pa_force, "lift the d*l cap");
    add_common(sub_paths, opts);

    // ideal
    auto* sub_ideal =
        app.add_subcommand("ideal", "emit prime-ideal generators for CAS validation");
    unsigned id_k = 2, id_l = 0, id_t = 0, id_d = 0, id_s = 2, id_j = 0;
    std::vector<unsigned> id_S;
    std::string id_target, id_emit = "generators";
    sub_ideal->add_option("--k", id_k, "grid rows (default 2)");
    sub_ideal->add_option("--l", id_l, "grid columns")->required();
    sub_ideal->add_option("--t", id_t, "row-minor size")->required();
    sub_ideal->add_option("--d", id_d, "ambient dimension")->required();
    sub_ideal->add_option("--s", id_s, "column-minor size (default 2)");
    sub_ideal->add_option("--target", id_target, "I | J | initial | IDelta")->required();
    sub_ideal->add_option("--S", id_S, "cells of S, comma separated")->delimiter(',');
    auto* j_opt = sub_ideal->add_option("--j", id_j, "intersection dimension j");
    sub_ideal->add_option("--emit", id_emit, "generators (default) | cas | macaulay2")
        ->check(CLI::IsMember({"generators", "cas", "macaulay2"}));
    add_common(sub_ideal, opts);

    // verify
    auto* sub_verify =
        app.add_subcommand("verify", "sampling/vanishing suite over admissible subsets");
    unsigned ve_t = 0, ve_d = 0, ve_l = 0, ve_seeds = 20;
    auto* ve_t_opt = sub_verify->add_option("--t", ve_t, "row-minor size");
    auto* ve_d_opt = sub_verify->add_option("--d", ve_d, "ambient dimension");
    auto* ve_l_opt = sub_verify->add_option("--l", ve_l, "grid columns");
    sub_verify->add_option("--seeds", ve_seeds, "seeds per (S, j) pair (default 20)");
    add_common(sub_verify, opts);

    // quasiproduct
    auto* sub_quasi = app.add_subcommand(
        "quasiproduct", "circuit axioms, rank, and uniform restrictions for d <= s+t-3");
    unsigned qp_k = 0, qp_l = 0, qp_s = 2, qp_t = 0, qp_d = 0;
    bool qp_axioms = false, qp_force = false;
    sub_quasi->add_option("--k", qp_k, "grid rows")->required();
    sub_quasi->add_option("--l", qp_l, "grid columns")->required();
    sub_quasi->add_option("--s", qp_s, "column-minor size (default 2)");
    sub_quasi->add_option("--t", qp_t, "row-minor size")->required();
    sub_quasi->add_option("--d", qp_d, "ambient dimension")->required();
    sub_quasi->add_flag("--check-axioms", qp_axioms,
                        "run the circuit-axiom check (always on; flag kept for scripts)");
    sub_quasi->add_flag("--force", qp_force, "lift the k*l cap");
    add_common(sub_quasi, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sub_decompose) {
            return cmd_decompose(opts, shape_from_flags(de_k, de_l, de_t, de_d, de_s),
                                 de_summary);
        }
        if (*sub_dimension) {
            return cmd_dimension(opts, shape_from_flags(di_k, di_l, di_t, di_d, di_s));
        }
        if (*sub_degree) {
            if (dg_json) opts.format = "json";
            return cmd_degree(opts, dg_d, dg_l, dg_t, dg_of, dg_method, dg_force);
        }
        if (*sub_transversals) {
            return cmd_transversals(opts, tr_d, tr_l, tr_t, tr_hg, tr_limit, tr_count_only,
                                    tr_force);
        }
        if (*sub_paths) {
            return cmd_paths(opts, pa_d, pa_l, pa_t, pa_limit, pa_count_only, pa_force);
        }
        if (*sub_ideal) {
            return cmd_ideal(opts, shape_from_flags(id_k, id_l, id_t, id_d, id_s), id_target,
                             id_S, j_opt->count() > 0, id_j, id_emit);
        }
        if (*sub_verify) {
            std::vector<std::array<unsigned, 3>> shapes;
            const bool any = ve_t_opt->count() || ve_d_opt->count() || ve_l_opt->count();
            if (any) {
                if (!(ve_t_opt->count() && ve_d_opt->count() && ve_l_opt->count())) {
                    throw std::invalid_argument(
                        "verify: --t, --d, --l must be given together");
                }
                shapes.push_back({ve_t, ve_d, ve_l});
            } else {
                shapes = {{3, 3, 4}, {3, 4, 4}, {4, 4, 5}};
            }
            return cmd_verify(opts, std::move(shapes), ve_seeds);
        }
        if (*sub_quasi) {
            (void)qp_axioms;
            return cmd_quasiproduct(opts, qp_k, qp_l, qp_s, qp_t, qp_d, qp_force);
        }
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
