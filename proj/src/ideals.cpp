#include "cigrid/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cigrid {

namespace {

unsigned family_rows_available(const MinorsFamily& f, unsigned ambient_rows) {
    return f.row_set ? static_cast<unsigned>(f.row_set->size()) : ambient_rows;
}

MinorsFamily make_minors(unsigned r, std::vector<unsigned> cols, unsigned ambient_rows) {
    if (r < 1) throw std::invalid_argument("minor family: size must be >= 1");
    MinorsFamily f;
    f.r = r;
    std::sort(cols.begin(), cols.end());
    f.column_set = std::move(cols);
    f.vacuous = r > std::min<unsigned>(ambient_rows,
                                       static_cast<unsigned>(f.column_set.size()));
    return f;
}

std::vector<unsigned> doubled_columns(const std::vector<unsigned>& cols) {
    std::vector<unsigned> out;
    for (unsigned a : cols) {
        out.push_back(2 * a - 1);
        out.push_back(2 * a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned> interval(unsigned lo, unsigned hi) {
    std::vector<unsigned> out;
    for (unsigned x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

void require_k2_admissible(const GridShape& g, const SubsetS& S, unsigned j,
                           const char* who) {
    if (g.k != 2) throw std::invalid_argument(std::string(who) + ": requires k = 2");
    if (S.empty()) throw std::invalid_argument(std::string(who) + ": requires S nonempty");
    const unsigned x = x_of_S(g, S);  // also validates admissibility
    if (j < x || j + 2 > g.t) {
        throw std::invalid_argument(std::string(who) + ": j outside P(S)");
    }
}

}  // namespace

IdealSpec ideal_I_Delta(const GridShape& g) {
    g.validate();
    IdealSpec spec;
    spec.name = "I_Delta";
    spec.ambient_name = "X";
    spec.rows = g.d;
    spec.cols = g.cells();
    for (unsigned i = 1; i <= g.k; ++i) {
        spec.families.push_back(make_minors(g.t, row_cells(g, i), g.d));
    }
    if (g.s <= g.k) {
        for (unsigned j = 1; j <= g.l; ++j) {
            spec.families.push_back(make_minors(g.s, column_cells(g, j), g.d));
        }
    }
    return spec;
}

IdealSpec ideal_I_S_j(const GridShape& g, const SubsetS& S, unsigned j) {
    require_k2_admissible(g, S, j, "ideal_I_S_j");
    IdealSpec spec;
    spec.name = "I_S_" + std::to_string(j);
    spec.ambient_name = "Y";
    spec.rows = g.d;
    spec.cols = g.l;
    std::vector<unsigned> meet;
    std::set_intersection(S.A.begin(), S.A.end(), S.B.begin(), S.B.end(),
                          std::back_inserter(meet));
    spec.families.push_back(make_minors(g.t, S.A, g.d));
    spec.families.push_back(make_minors(g.t, S.B, g.d));
    spec.families.push_back(make_minors(j + 1, meet, g.d));
    spec.families.push_back(make_minors(2 * g.t - j - 1, interval(1, g.l), g.d));
    return spec;
}

IdealSpec ideal_J_S_j(const GridShape& g, const SubsetS& S, unsigned j) {
    require_k2_admissible(g, S, j, "ideal_J_S_j");
    IdealSpec spec;
    spec.name = "J_S_" + std::to_string(j);
    spec.ambient_name = "X";
    spec.rows = g.d;
    spec.cols = 2 * g.l;
    VariablesFamily vars;
    for (unsigned p : S.cells) {
        for (unsigned i = 1; i <= g.d; ++i) vars.cells.push_back(GridCell{i, p});
    }
    spec.families.push_back(std::move(vars));
    for (unsigned col = 1; col <= g.l; ++col) {
        std::vector<unsigned> surviving;
        for (unsigned p : column_cells(g, col)) {
            if (!std::binary_search(S.cells.begin(), S.cells.end(), p)) {
                surviving.push_back(p);
            }
        }
        spec.families.push_back(make_minors(2, std::move(surviving), g.d));
    }
    std::vector<unsigned> meet;
    std::set_intersection(S.A.begin(), S.A.end(), S.B.begin(), S.B.end(),
                          std::back_inserter(meet));
    spec.families.push_back(make_minors(g.t, doubled_columns(S.A), g.d));
    spec.families.push_back(make_minors(g.t, doubled_columns(S.B), g.d));
    spec.families.push_back(make_minors(j + 1, doubled_columns(meet), g.d));
    spec.families.push_back(make_minors(2 * g.t - j - 1, interval(1, 2 * g.l), g.d));
    return spec;
}

IdealSpec ideal_J_empty(const GridShape& g) {
    g.validate();
    if (g.k != 2 && g.t != g.l) {
        throw std::invalid_argument("ideal_J_empty: requires k = 2 or t = l");
    }
    IdealSpec spec;
    spec.name = "J_empty";
    spec.ambient_name = "X";
    spec.rows = g.d;
    spec.cols = g.cells();
    for (unsigned j = 1; j <= g.l; ++j) {
        spec.families.push_back(make_minors(2, column_cells(g, j), g.d));
    }
    spec.families.push_back(make_minors(g.t, interval(1, g.cells()), g.d));
    return spec;
}

IdealSpec ideal_initial_J_empty(const GridShape& g) {
    g.validate();
    if (g.k != 2) throw std::invalid_argument("ideal_initial_J_empty: requires k = 2");
    IdealSpec spec;
    spec.name = "initial_J_empty";
    spec.ambient_name = "X";
    spec.rows = g.d;
    spec.cols = 2 * g.l;
    MonomialsFamily quadrics;
    for (unsigned j = 1; j <= g.l; ++j) {
        for (unsigned i = 1; i < g.d; ++i) {
            for (unsigned i2 = i + 1; i2 <= g.d; ++i2) {
                quadrics.monomials.push_back(
                    {GridCell{i, 2 * j - 1}, GridCell{i2, 2 * j}});
            }
        }
    }
    spec.families.push_back(std::move(quadrics));
    // diagonal monomials on strictly increasing rows and columns, at most
    // one column per pair: exactly the monomials not already divisible by
    // a quadric above
    MonomialsFamily diagonals;
    if (g.t <= g.d) {
        std::vector<unsigned> rows(g.t), pairs(g.t);
        auto rec_pairs = [&](auto&& self, unsigned start, unsigned depth) -> void {
            if (depth == g.t) {
                for (unsigned mask = 0; mask < (1u << g.t); ++mask) {
                    std::vector<GridCell> monomial;
                    for (unsigned m = 0; m < g.t; ++m) {
                        monomial.push_back(
                            GridCell{rows[m], 2 * pairs[m] - ((mask >> m) & 1u)});
                    }
                    diagonals.monomials.push_back(std::move(monomial));
                }
                return;
            }
            for (unsigned p = start; p + (g.t - depth) <= g.l + 1; ++p) {
                pairs[depth] = p;
                self(self, p + 1, depth + 1);
            }
        };
        auto rec_rows = [&](auto&& self, unsigned start, unsigned depth) -> void {
            if (depth == g.t) {
                rec_pairs(rec_pairs, 1, 0);
                return;
            }
            for (unsigned r = start; r + (g.t - depth) <= g.d + 1; ++r) {
                rows[depth] = r;
                self(self, r + 1, depth + 1);
            }
        };
        rec_rows(rec_rows, 1, 0);
        std::sort(diagonals.monomials.begin(), diagonals.monomials.end());
    }
    spec.families.push_back(std::move(diagonals));
    return spec;
}

RIntersectionResult r_intersection_minors(const GridShape& g, const SubsetS& S,
                                          unsigned r) {
    g.validate();
    if (r < 1 || r > g.t) {
        throw std::invalid_argument("r_intersection_minors: requires 1 <= r <= t");
    }
    if (!is_admissible(g, S)) {
        throw std::invalid_argument("r_intersection_minors: S must be admissible");
    }
    auto collect = [&](unsigned depth) {
        std::vector<std::vector<unsigned>> found;
        std::vector<unsigned> current;
        auto rec = [&](auto&& self, unsigned level) -> void {
            if (level == depth) {
                found.push_back(current);
                return;
            }
            for (unsigned i = 0; i < g.k; ++i) {
                const auto& next = S.surviving_columns[i];
                if (level == 0) {
                    current = next;
                    self(self, 1);
                    continue;
                }
                // chain condition: the running intersection must not be
                // contained in the next set
                if (std::includes(next.begin(), next.end(), current.begin(),
                                  current.end())) {
                    continue;
                }
                std::vector<unsigned> meet;
                std::set_intersection(current.begin(), current.end(), next.begin(),
                                      next.end(), std::back_inserter(meet));
                std::vector<unsigned> saved = std::move(current);
                current = std::move(meet);
                self(self, level + 1);
                current = std::move(saved);
            }
        };
        rec(rec, 0);
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        return found;
    };
    RIntersectionResult result;
    result.intersections = collect(r);
    result.forces_empty = !collect(g.t).empty();
    result.fragment.name = "r_intersection_" + std::to_string(r);
    result.fragment.ambient_name = "Y";
    result.fragment.rows = g.d;
    result.fragment.cols = g.l;
    for (const auto& F : result.intersections) {
        result.fragment.families.push_back(make_minors(g.t - r + 1, F, g.d));
    }
    return result;
}

namespace {

Rat draw_rat(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    return make_rat(Int(num), Int(den));
}

Rat draw_nonzero_rat(std::mt19937_64& rng) {
    const long mag = static_cast<long>(rng() % 9) + 1;
    const long num = (rng() & 1u) ? -mag : mag;
    const long den = static_cast<long>(rng() % 9) + 1;
    return make_rat(Int(num), Int(den));
}

RatMatrix draw_matrix(std::mt19937_64& rng, unsigned rows, unsigned cols) {
    RatMatrix m(rows, cols);
    for (unsigned i = 0; i < rows; ++i) {
        for (unsigned j = 0; j < cols; ++j) m.at(i, j) = draw_rat(rng);
    }
    return m;
}

}  // namespace

PhiParams sample_phi_params(const GridShape& g, const SubsetS& S, unsigned j,
                            std::uint64_t seed) {
    require_k2_admissible(g, S, j, "sample_phi_params");
    std::mt19937_64 rng(seed);
    const unsigned mid = g.l - S.u - S.v;  // |A ∩ B|
    PhiParams params;
    params.M = draw_matrix(rng, g.d, 2 * g.t - 2 - j);
    params.N1 = draw_matrix(rng, g.t - 1, S.u);
    params.N2 = draw_matrix(rng, j, mid);
    params.N3 = draw_matrix(rng, g.t - 1, S.v);
    return params;
}

VectorConfig apply_phi(const GridShape& g, const SubsetS& S, unsigned j,
                       const PhiParams& params) {
    require_k2_admissible(g, S, j, "apply_phi");
    std::vector<unsigned> b_minus_a, a_minus_b, meet;
    std::set_difference(S.B.begin(), S.B.end(), S.A.begin(), S.A.end(),
                        std::back_inserter(b_minus_a));
    std::set_difference(S.A.begin(), S.A.end(), S.B.begin(), S.B.end(),
                        std::back_inserter(a_minus_b));
    std::set_intersection(S.A.begin(), S.A.end(), S.B.begin(), S.B.end(),
                          std::back_inserter(meet));
    // M-column windows, 1-based inclusive
    const unsigned t = g.t;
    auto block_column = [&](unsigned lo, unsigned hi, const RatMatrix& N,
                            unsigned ncol) {
        std::vector<Rat> out(g.d, Rat(0));
        for (unsigned c = lo; c <= hi; ++c) {
            const Rat& weight = N.at(c - lo, ncol);
            for (unsigned r = 0; r < g.d; ++r) {
                out[r] += params.M.at(r, c - 1) * weight;
            }
        }
        return out;
    };
    VectorConfig gamma;
    gamma.d = g.d;
    gamma.vectors.resize(g.l);
    for (unsigned idx = 0; idx < b_minus_a.size(); ++idx) {
        gamma.vectors[b_minus_a[idx] - 1] = block_column(1, t - 1, params.N1, idx);
    }
    for (unsigned idx = 0; idx < meet.size(); ++idx) {
        gamma.vectors[meet[idx] - 1] = block_column(t - j, t - 1, params.N2, idx);
    }
    for (unsigned idx = 0; idx < a_minus_b.size(); ++idx) {
        gamma.vectors[a_minus_b[idx] - 1] =
            block_column(t - j, 2 * t - 2 - j, params.N3, idx);
    }
    return gamma;
}

VectorConfig sample_phi(const GridShape& g, const SubsetS& S, unsigned j,
                        std::uint64_t seed) {
    for (unsigned attempt = 0; attempt < 10; ++attempt) {
        const std::uint64_t attempt_seed =
            seed + attempt * 0x9E3779B97F4A7C15ull;
        PhiParams params = sample_phi_params(g, S, j, attempt_seed);
        VectorConfig gamma = apply_phi(g, S, j, params);
        if (in_F_S_j(g, gamma, S, j)) return gamma;
    }
    throw CrossCheckError("sample_phi: no generic sample within 10 attempts");
}

VectorConfig sample_psi(const GridShape& g, const SubsetS& S, const VectorConfig& gamma_l,
                        std::uint64_t seed) {
    gamma_l.validate();
    if (gamma_l.size() != g.l) {
        throw std::invalid_argument("sample_psi: expected one vector per column");
    }
    std::mt19937_64 rng(seed);
    VectorConfig lifted;
    lifted.d = gamma_l.d;
    lifted.vectors.resize(g.cells());
    for (unsigned p = 1; p <= g.cells(); ++p) {
        if (std::binary_search(S.cells.begin(), S.cells.end(), p)) {
            lifted.vectors[p - 1].assign(gamma_l.d, Rat(0));
            continue;
        }
        const Rat lambda = draw_nonzero_rat(rng);
        const auto& base = gamma_l.vectors[cell_col(g, p) - 1];
        std::vector<Rat> scaled(gamma_l.d);
        for (unsigned r = 0; r < gamma_l.d; ++r) scaled[r] = lambda * base[r];
        lifted.vectors[p - 1] = std::move(scaled);
    }
    return lifted;
}

bool check_vanishing(const VectorConfig& point, const IdealSpec& spec) {
    point.validate();
    if (point.d != spec.rows || point.size() != spec.cols) {
        throw std::invalid_argument("check_vanishing: point does not match the ambient matrix");
    }
    for (const GeneratorFamily& family : spec.families) {
        if (const auto* vars = std::get_if<VariablesFamily>(&family)) {
            for (const GridCell& c : vars->cells) {
                if (point.vectors[c.col - 1][c.row - 1] != 0) return false;
            }
        } else if (const auto* minors = std::get_if<MinorsFamily>(&family)) {
            if (minors->vacuous) continue;
            const std::vector<unsigned>* rows = minors->row_set ? &*minors->row_set : nullptr;
            const unsigned nrows = rows ? static_cast<unsigned>(rows->size()) : spec.rows;
            RatMatrix m(nrows, minors->column_set.size());
            for (std::size_t cc = 0; cc < minors->column_set.size(); ++cc) {
                const auto& v = point.vectors[minors->column_set[cc] - 1];
                for (unsigned rr = 0; rr < nrows; ++rr) {
                    m.at(rr, cc) = v[(rows ? (*rows)[rr] : rr + 1) - 1];
                }
            }
            if (rank_rational(std::move(m)) >= minors->r) return false;
        } else if (const auto* mono = std::get_if<MonomialsFamily>(&family)) {
            for (const auto& monomial : mono->monomials) {
                bool has_zero = false;
                for (const GridCell& c : monomial) {
                    if (point.vectors[c.col - 1][c.row - 1] == 0) {
                        has_zero = true;
                        break;
                    }
                }
                if (!has_zero) return false;
            }
        }
    }
    return true;
}

namespace {

std::string cell_token(const GridCell& c) {
    return std::to_string(c.row) + "," + std::to_string(c.col);
}

GridCell parse_cell_token(const std::string& token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("generator list: malformed cell '" + token + "'");
    }
    GridCell c;
    c.row = static_cast<unsigned>(std::stoul(token.substr(0, comma)));
    c.col = static_cast<unsigned>(std::stoul(token.substr(comma + 1)));
    return c;
}

}  // namespace

std::string emit_generators(const IdealSpec& spec) {
    std::ostringstream out;
    out << "ideal " << spec.name << "\n";
    out << "ambient " << spec.ambient_name << " " << spec.rows << " " << spec.cols
        << "\n";
    for (const GeneratorFamily& family : spec.families) {
        if (const auto* vars = std::get_if<VariablesFamily>(&family)) {
            out << "variables";
            for (const GridCell& c : vars->cells) out << " " << cell_token(c);
            out << "\n";
        } else if (const auto* minors = std::get_if<MinorsFamily>(&family)) {
            if (minors->vacuous) continue;  // no minors of that size exist
            out << "minors " << minors->r;
            if (minors->row_set) {
                out << " rows";
                for (unsigned r : *minors->row_set) out << " " << r;
            }
            out << " cols";
            for (unsigned c : minors->column_set) out << " " << c;
            out << "\n";
        } else if (const auto* mono = std::get_if<MonomialsFamily>(&family)) {
            out << "monomials";
            for (const auto& monomial : mono->monomials) {
                out << " ";
                for (std::size_t i = 0; i < monomial.size(); ++i) {
                    if (i) out << "*";
                    out << cell_token(monomial[i]);
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

IdealSpec parse_generators(const std::string& text) {
    IdealSpec spec;
    std::istringstream in(text);
    std::string line;
    bool saw_ideal = false, saw_ambient = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "ideal") {
            ls >> spec.name;
            saw_ideal = true;
        } else if (keyword == "ambient") {
            ls >> spec.ambient_name >> spec.rows >> spec.cols;
            saw_ambient = true;
        } else if (keyword == "variables") {
            VariablesFamily vars;
            std::string token;
            while (ls >> token) vars.cells.push_back(parse_cell_token(token));
            spec.families.emplace_back(std::move(vars));
        } else if (keyword == "minors") {
            MinorsFamily minors;
            ls >> minors.r;
            std::string token;
            ls >> token;
            if (token == "rows") {
                std::vector<unsigned> rows;
                while (ls >> token) {
                    if (token == "cols") break;
                    rows.push_back(static_cast<unsigned>(std::stoul(token)));
                }
                minors.row_set = std::move(rows);
            }
            if (token != "cols") {
                throw std::invalid_argument("generator list: expected 'cols' in minors line");
            }
            while (ls >> token) {
                if (token == "vacuous") {
                    minors.vacuous = true;
                    break;
                }
                minors.column_set.push_back(static_cast<unsigned>(std::stoul(token)));
            }
            spec.families.emplace_back(std::move(minors));
        } else if (keyword == "monomials") {
            MonomialsFamily mono;
            std::string token;
            while (ls >> token) {
                std::vector<GridCell> monomial;
                std::size_t pos = 0;
                while (pos < token.size()) {
                    const auto star = token.find('*', pos);
                    const std::string piece = star == std::string::npos
                                                  ? token.substr(pos)
                                                  : token.substr(pos, star - pos);
                    monomial.push_back(parse_cell_token(piece));
                    pos = star == std::string::npos ? token.size() : star + 1;
                }
                mono.monomials.push_back(std::move(monomial));
            }
            spec.families.emplace_back(std::move(mono));
        } else {
            throw std::invalid_argument("generator list: unknown keyword '" + keyword + "'");
        }
    }
    if (!saw_ideal || !saw_ambient) {
        throw std::invalid_argument("generator list: missing ideal or ambient line");
    }
    return spec;
}

std::string emit_macaulay2(const IdealSpec& spec) {
    std::ostringstream out;
    std::string var = spec.ambient_name;
    std::transform(var.begin(), var.end(), var.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    out << "-- ideal " << spec.name << " on a " << spec.rows << " x " << spec.cols
        << " matrix of variables\n";
    out << "R = QQ[" << var << "_(1,1).." << var << "_(" << spec.rows << ","
        << spec.cols << ")];\n";
    out << spec.ambient_name << " = matrix for i from 1 to " << spec.rows
        << " list for j from 1 to " << spec.cols << " list " << var << "_(i,j);\n";
    out << "I = ideal(0_R);\n";
    for (const GeneratorFamily& family : spec.families) {
        if (const auto* vars = std::get_if<VariablesFamily>(&family)) {
            if (vars->cells.empty()) continue;
            out << "I = I + ideal(";
            for (std::size_t i = 0; i < vars->cells.size(); ++i) {
                if (i) out << ", ";
                out << var << "_(" << vars->cells[i].row << "," << vars->cells[i].col
                    << ")";
            }
            out << ");\n";
        } else if (const auto* minors = std::get_if<MinorsFamily>(&family)) {
            if (minors->vacuous) continue;
            out << "I = I + minors(" << minors->r << ", ";
            const bool all_cols =
                !minors->row_set &&
                minors->column_set.size() == spec.cols &&
                minors->column_set.front() == 1 && minors->column_set.back() == spec.cols;
            if (all_cols) {
                out << spec.ambient_name;
            } else {
                out << "submatrix(" << spec.ambient_name << ", ";
                if (minors->row_set) {
                    out << "{";
                    for (std::size_t i = 0; i < minors->row_set->size(); ++i) {
                        if (i) out << ",";
                        out << (*minors->row_set)[i] - 1;
                    }
                    out << "}, ";
                }
                out << "{";
                for (std::size_t i = 0; i < minors->column_set.size(); ++i) {
                    if (i) out << ",";
                    out << minors->column_set[i] - 1;
                }
                out << "})";
            }
            out << ");\n";
        } else if (const auto* mono = std::get_if<MonomialsFamily>(&family)) {
            if (mono->monomials.empty()) continue;
            out << "I = I + ideal(";
            for (std::size_t i = 0; i < mono->monomials.size(); ++i) {
                if (i) out << ", ";
                for (std::size_t c = 0; c < mono->monomials[i].size(); ++c) {
                    if (c) out << "*";
                    out << var << "_(" << mono->monomials[i][c].row << ","
                        << mono->monomials[i][c].col << ")";
                }
            }
            out << ");\n";
        }
    }
    out << "I\n";
    return out.str();
}

std::string emit_cas_script(const IdealSpec& spec, const std::string& dialect) {
    if (dialect == "generators") return emit_generators(spec);
    if (dialect == "macaulay2") return emit_macaulay2(spec);
    throw std::invalid_argument("emit_cas_script: unknown dialect '" + dialect + "'");
}

}  // namespace cigrid
