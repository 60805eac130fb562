// Acceptance gate: one line per criterion, wall-clock budget enforced.
// Criteria 1 and 2 exercise the shipped CLI binary (CIGRID_BIN); the rest
// drive the library directly.

#include "cigrid/decompose.hpp"
#include "cigrid/degree.hpp"
#include "cigrid/ideals.hpp"
#include "cigrid/matroid.hpp"
#include "cigrid/oracle.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cigrid;
using Json = nlohmann::ordered_json;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

#define REQUIRE(cond, msg)                                        \
    do {                                                          \
        if (!(cond)) {                                            \
            g_detail << "    " << msg << "\n";                    \
            return false;                                         \
        }                                                         \
    } while (0)

std::string run_cli(const std::string& args) {
    const char* bin = std::getenv("CIGRID_BIN");
    if (!bin) return "";
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

GridShape shape(unsigned k, unsigned l, unsigned t, unsigned d, unsigned s = 2) {
    GridShape g;
    g.k = k; g.l = l; g.t = t; g.d = d; g.s = s;
    return g;
}

// 1: t = l census through the CLI
bool criterion_component_count_t_eq_l() {
    std::string out = run_cli("decompose --k 3 --l 6 --t 6 --d 4 --format json");
    REQUIRE(!out.empty(), "CLI produced no output");
    Json j = Json::parse(out, nullptr, false);
    REQUIRE(!j.is_discarded(), "CLI output is not valid JSON");
    REQUIRE(j.at("component_count") == 211,
            "component_count = " << j.at("component_count") << ", want 211");
    REQUIRE(j.at("components").size() == 211, "component list size mismatch");
    return true;
}

// 2: k = 2 census and per-type maximal j table through the CLI
bool criterion_component_count_k2() {
    std::string out = run_cli("decompose --k 2 --t 4 --d 5 --l 5 --format json");
    REQUIRE(!out.empty(), "CLI produced no output");
    Json j = Json::parse(out, nullptr, false);
    REQUIRE(!j.is_discarded(), "CLI output is not valid JSON");
    REQUIRE(j.at("component_count") == 111,
            "component_count = " << j.at("component_count") << ", want 111");

    std::map<std::pair<unsigned, unsigned>, std::pair<unsigned, std::vector<unsigned>>>
        table;
    for (const auto& ty : j.at("types")) {
        table[{ty.at("u"), ty.at("v")}] = {
            ty.at("subset_count"), ty.at("maximal_js").get<std::vector<unsigned>>()};
    }
    auto expect = [&](unsigned u, unsigned v, unsigned count,
                      std::vector<unsigned> js) -> bool {
        auto it = table.find({u, v});
        if (it == table.end()) return false;
        return it->second.first == count && it->second.second == js;
    };
    REQUIRE(expect(0, 1, 5, {}) && expect(0, 2, 10, {}) && expect(1, 0, 5, {}) &&
                expect(2, 0, 10, {}),
            "types without maximal strata do not match");
    REQUIRE(expect(1, 1, 20, {2}) && expect(1, 2, 30, {2}) && expect(2, 1, 30, {2}),
            "intersection-dimension-2 types do not match");
    REQUIRE(expect(2, 2, 30, {1}), "type (2,2) does not match");
    return true;
}

// 3: dimension formula against the emitted component maximum
bool criterion_dimension() {
    GridShape g = shape(2, 10, 5, 6);
    REQUIRE(dim_V_Delta_formula(g) == 58, "dim V_Delta(2,10,5,6) != 58");
    for (unsigned t = 2; t <= 4; ++t) {
        for (unsigned l = t; l <= 6; ++l) {
            for (unsigned d = t; d <= 6; ++d) {
                GridShape h = shape(2, l, t, d);
                DecompositionReport rep = decompose_k2(h);
                unsigned long best = 0;
                for (const auto& c : rep.components) best = std::max(best, c.dim);
                REQUIRE(rep.dim_V_Delta == best,
                        "component max mismatch at l=" << l << " t=" << t
                                                       << " d=" << d);
                REQUIRE(dim_V_Delta_formula(h) == best,
                        "formula mismatch at l=" << l << " t=" << t << " d=" << d);
            }
        }
    }
    return true;
}

// 4: pinned generating-function coefficient
bool criterion_lgv_coefficient() {
    SparsePoly G = lgv_generating_function(4, 5, 3);
    REQUIRE(G.coefficient({3, 3, 3, 3, 2}) == 2,
            "coefficient of z^(3,3,3,3,2) in G_{4,5,3} is "
                << G.coefficient({3, 3, 3, 3, 2}).get_str() << ", want 2");
    return true;
}

// 5: four independent degree computations agree (five when t = d)
bool criterion_degree_agreement() {
    for (unsigned d = 2; d * 2 <= 20; ++d) {
        for (unsigned l = 2; d * l <= 20; ++l) {
            for (unsigned t = 2; t <= std::min(d, l); ++t) {
                Int lgv = deg_V_empty(d, l, t);

                Int paths = 0;
                for (const auto& f : enumerate_path_families(d, l, t))
                    paths += family_weight(f);

                Int weighted = 0;
                for (const auto& tr : minimal_transversals(hypergraph_A(d, l, t))) {
                    std::vector<GridCell> cells;
                    for (unsigned v : tr) cells.push_back(vertex_to_cell(l, v));
                    weighted += multiplicity_m(d, l, cells);
                }

                Int doubled(static_cast<long>(
                    minimal_transversals(hypergraph_B(d, l, t)).size()));

                REQUIRE(lgv == paths && lgv == weighted && lgv == doubled,
                        "disagreement at d=" << d << " l=" << l << " t=" << t << ": "
                                             << lgv.get_str() << "/" << paths.get_str()
                                             << "/" << weighted.get_str() << "/"
                                             << doubled.get_str());
                if (t == d) {
                    REQUIRE(lgv == deg_V_empty_closed_form(d, l),
                            "closed form mismatch at d=" << d << " l=" << l);
                }
            }
        }
    }
    return true;
}

// 6: minimal diagonal transversals are uniform and biject with path families
bool criterion_transversal_structure() {
    for (unsigned d = 2; d <= 5; ++d) {
        for (unsigned l = 2; l <= 5; ++l) {
            for (unsigned t = 2; t <= std::min({d, l, 3u}); ++t) {
                auto mins = minimal_transversals(hypergraph_A(d, l, t));
                const std::size_t want = (d - t + 1) * (l - t + 1);
                for (const auto& tr : mins) {
                    REQUIRE(tr.size() == want,
                            "transversal size " << tr.size() << " != " << want
                                                << " at d=" << d << " l=" << l
                                                << " t=" << t);
                }
                REQUIRE(Int(static_cast<long>(mins.size())) ==
                            deg_determinantal(d, l, t),
                        "|min(A_t)| mismatch at d=" << d << " l=" << l << " t=" << t);

                std::set<std::vector<unsigned>> min_set(mins.begin(), mins.end());
                std::set<std::vector<unsigned>> complements;
                for (const auto& f : enumerate_path_families(d, l, t)) {
                    std::vector<unsigned> verts;
                    for (const GridCell& c : complement_of_family(f))
                        verts.push_back(cell_to_vertex(l, c));
                    std::sort(verts.begin(), verts.end());
                    complements.insert(verts);
                }
                REQUIRE(complements == min_set,
                        "complement/transversal set mismatch at d=" << d << " l=" << l
                                                                    << " t=" << t);
            }
        }
    }
    return true;
}

// 7: deterministic samples vanish on the matching stratum ideals
bool criterion_vanishing() {
    const std::vector<std::array<unsigned, 3>> shapes{{3, 3, 4}, {3, 4, 4}, {4, 4, 5}};
    for (auto [t, d, l] : shapes) {
        GridShape g = shape(2, l, t, d);
        for (const SubsetS& S : enumerate_admissible(g)) {
            if (S.empty()) continue;
            for (unsigned j : maximal_js(g, S)) {
                IdealSpec spec_i = ideal_I_S_j(g, S, j);
                IdealSpec spec_j = ideal_J_S_j(g, S, j);
                for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                    VectorConfig point = sample_phi(g, S, j, seed);
                    REQUIRE(in_F_S_j(g, point, S, j),
                            "phi sample off the stratum at t=" << t << " d=" << d
                                                               << " l=" << l);
                    REQUIRE(check_vanishing(point, spec_i),
                            "I_S_j does not vanish at t=" << t << " d=" << d
                                                          << " l=" << l);
                    VectorConfig lift =
                        sample_psi(g, S, point, seed ^ 0x9E3779B97F4A7C15ull);
                    REQUIRE(in_U_S(g, lift, S),
                            "psi lift off U_S at t=" << t << " d=" << d << " l=" << l);
                    REQUIRE(check_vanishing(lift, spec_j),
                            "J_S_j does not vanish at t=" << t << " d=" << d
                                                          << " l=" << l);
                }
            }
        }
    }
    return true;
}

// 8: quasi-products satisfy circuit axioms, rank, and uniform restrictions
bool criterion_quasi_product() {
    for (unsigned k = 2; k <= 4; ++k) {
        for (unsigned l = 2; k * l <= 9; ++l) {
            for (unsigned s = 2; s <= k; ++s) {
                for (unsigned t = 2; t <= l; ++t) {
                    for (unsigned d = 1; d + 3 <= s + t; ++d) {
                        CircuitFamily fam = quasi_product_circuits(k, l, s, t, d);
                        REQUIRE(verify_circuit_axioms(fam),
                                "axioms fail at k=" << k << " l=" << l << " s=" << s
                                                    << " t=" << t << " d=" << d);
                        MatroidView m = matroid_from_circuits(fam);
                        REQUIRE(m.rank_full() == d,
                                "rank " << m.rank_full() << " != " << d << " at k=" << k
                                        << " l=" << l << " s=" << s << " t=" << t);
                        GridShape g = shape(k, l, t, d, s);
                        const std::size_t row_rank = std::min(d, t - 1);
                        const std::size_t col_rank = std::min(d, s - 1);
                        for (unsigned i = 1; i <= k; ++i) {
                            REQUIRE(restriction_is_uniform(m, row_cells(g, i), row_rank),
                                    "row restriction not uniform at k="
                                        << k << " l=" << l << " s=" << s << " t=" << t
                                        << " d=" << d);
                        }
                        for (unsigned j = 1; j <= l; ++j) {
                            REQUIRE(
                                restriction_is_uniform(m, column_cells(g, j), col_rank),
                                "column restriction not uniform at k="
                                    << k << " l=" << l << " s=" << s << " t=" << t
                                    << " d=" << d);
                        }
                    }
                }
            }
        }
    }
    return true;
}

// 9: initial-ideal monomials equal the doubled-grid hypergraph edges
bool criterion_hypergraph_bridge() {
    for (unsigned d = 2; d <= 5; ++d) {
        for (unsigned l = 2; l <= 5; ++l) {
            for (unsigned t = 2; t <= std::min(d, l); ++t) {
                GridShape g = shape(2, l, t, d);
                std::set<std::vector<unsigned>> monomials;
                for (const auto& fam : ideal_initial_J_empty(g).families) {
                    if (const auto* mono = std::get_if<MonomialsFamily>(&fam)) {
                        for (const auto& m : mono->monomials) {
                            std::vector<unsigned> verts;
                            for (const GridCell& c : m)
                                verts.push_back(cell_to_vertex(2 * l, c));
                            std::sort(verts.begin(), verts.end());
                            monomials.insert(verts);
                        }
                    }
                }
                Hypergraph b = hypergraph_B(d, l, t);
                std::set<std::vector<unsigned>> edges(b.edges.begin(), b.edges.end());
                REQUIRE(monomials == edges, "monomial/edge mismatch at d="
                                                << d << " l=" << l << " t=" << t);
            }
        }
    }
    return true;
}

struct Criterion {
    const char* label;
    bool (*fn)();
    double budget_seconds;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"component count, t = l (211 via CLI)", criterion_component_count_t_eq_l, 1.0},
        {"component count, k = 2 (111 + type table via CLI)",
         criterion_component_count_k2, 1.0},
        {"dimension formula vs component maximum", criterion_dimension, 10.0},
        {"generating-function coefficient", criterion_lgv_coefficient, 1.0},
        {"degree method agreement", criterion_degree_agreement, 120.0},
        {"transversal structure", criterion_transversal_structure, 60.0},
        {"vanishing suite", criterion_vanishing, 120.0},
        {"quasi-product matroids", criterion_quasi_product, 30.0},
        {"initial ideal vs hypergraph", criterion_hypergraph_bridge, 10.0},
    };

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        g_detail.str("");
        const auto start = std::chrono::steady_clock::now();
        bool ok = criteria[i].fn();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && elapsed > criteria[i].budget_seconds) {
            ok = false;
            g_detail << "    over budget: " << elapsed << " s > "
                     << criteria[i].budget_seconds << " s\n";
        }
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] criterion %zu: %s (%.2fs)",
                      ok ? "PASS" : "FAIL", i + 1, criteria[i].label, elapsed);
        std::cout << line << "\n" << g_detail.str();
        if (!ok) ++g_failures;
    }

    if (g_failures == 0) {
        std::cout << "all 9 acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
