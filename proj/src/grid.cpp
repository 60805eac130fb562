#include "cigrid/grid.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace cigrid {

void GridShape::validate() const {
    if (k < 1) throw std::invalid_argument("shape: k must be >= 1");
    if (l < 1) throw std::invalid_argument("shape: l must be >= 1");
    if (t < 2 || t > l) throw std::invalid_argument("shape: need 2 <= t <= l");
    if (s < 2) throw std::invalid_argument("shape: s must be >= 2");
    if (d < 1) throw std::invalid_argument("shape: d must be >= 1");
}

void GridShape::validate_decomposition() const {
    validate();
    if (t == l) return;
    if (k != 2) throw std::invalid_argument("decomposition: requires k = 2 or t = l");
    if (d < t) throw std::invalid_argument("decomposition: requires d >= t when t < l");
}

unsigned cell_index(const GridShape& g, unsigned i, unsigned j) {
    if (i < 1 || i > g.k || j < 1 || j > g.l) throw std::invalid_argument("cell_index: out of range");
    return (j - 1) * g.k + i;
}

unsigned cell_row(const GridShape& g, unsigned p) {
    if (p < 1 || p > g.cells()) throw std::invalid_argument("cell_row: out of range");
    return (p - 1) % g.k + 1;
}

unsigned cell_col(const GridShape& g, unsigned p) {
    if (p < 1 || p > g.cells()) throw std::invalid_argument("cell_col: out of range");
    return (p - 1) / g.k + 1;
}

std::vector<unsigned> row_cells(const GridShape& g, unsigned i) {
    if (i < 1 || i > g.k) throw std::invalid_argument("row_cells: row out of range");
    std::vector<unsigned> out;
    out.reserve(g.l);
    for (unsigned j = 1; j <= g.l; ++j) out.push_back((j - 1) * g.k + i);
    return out;
}

std::vector<unsigned> column_cells(const GridShape& g, unsigned j) {
    if (j < 1 || j > g.l) throw std::invalid_argument("column_cells: column out of range");
    std::vector<unsigned> out;
    out.reserve(g.k);
    for (unsigned i = 1; i <= g.k; ++i) out.push_back((j - 1) * g.k + i);
    return out;
}

void Hypergraph::normalize() {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

namespace {

// all size-r subsets of the (sorted) ground vector, appended to out
void append_subsets(const std::vector<unsigned>& ground, unsigned r,
                    std::vector<std::vector<unsigned>>& out) {
    if (r > ground.size()) return;
    std::vector<unsigned> pick(r);
    auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == r) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i + (r - depth) <= ground.size(); ++i) {
            pick[depth] = ground[i];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

Hypergraph delta_hypergraph(const GridShape& g) {
    g.validate();
    Hypergraph h;
    h.vertex_count = g.cells();
    for (unsigned i = 1; i <= g.k; ++i) append_subsets(row_cells(g, i), g.t, h.edges);
    for (unsigned j = 1; j <= g.l; ++j) append_subsets(column_cells(g, j), g.s, h.edges);
    h.normalize();
    return h;
}

SubsetS make_subset(const GridShape& g, std::vector<unsigned> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (unsigned p : cells) {
        if (p < 1 || p > g.cells()) throw std::invalid_argument("make_subset: cell out of range");
    }
    SubsetS S;
    S.cells = std::move(cells);
    std::vector<std::set<unsigned>> zeroed(g.k);  // columns zeroed per row
    for (unsigned p : S.cells) zeroed[cell_row(g, p) - 1].insert(cell_col(g, p));
    S.surviving_columns.resize(g.k);
    for (unsigned i = 0; i < g.k; ++i) {
        for (unsigned j = 1; j <= g.l; ++j) {
            if (!zeroed[i].count(j)) S.surviving_columns[i].push_back(j);
        }
    }
    if (g.k == 2) {
        S.A = S.surviving_columns[0];
        S.B = S.surviving_columns[1];
        S.u = g.l - static_cast<unsigned>(S.A.size());
        S.v = g.l - static_cast<unsigned>(S.B.size());
    }
    return S;
}

bool is_admissible(const GridShape& g, const SubsetS& S) {
    for (unsigned i = 0; i < g.k; ++i) {
        // |R_i \ S| is the surviving-column count for row i; need >= t-1
        if (S.surviving_columns[i].size() < g.t - 1) return false;
    }
    // no full column: some row must survive in every column
    std::vector<unsigned> hits(g.l + 1, 0);
    for (unsigned p : S.cells) ++hits[cell_col(g, p)];
    for (unsigned j = 1; j <= g.l; ++j) {
        if (hits[j] == g.k) return false;
    }
    return true;
}

namespace {

void append_column_choices(unsigned l, unsigned size, const std::vector<unsigned>& forbidden,
                           std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> ground;
    std::vector<char> bad(l + 1, 0);
    for (unsigned j : forbidden) bad[j] = 1;
    for (unsigned j = 1; j <= l; ++j) {
        if (!bad[j]) ground.push_back(j);
    }
    append_subsets(ground, size, out);
}

}  // namespace

std::vector<SubsetS> enumerate_admissible(const GridShape& g) {
    g.validate();
    std::vector<SubsetS> out;
    if (g.k == 2) {
        const unsigned cap = g.l - (g.t - 1);  // |S ∩ R_i| <= l - t + 1
        for (unsigned u = 0; u <= cap; ++u) {
            for (unsigned v = 0; v <= cap; ++v) {
                std::vector<std::vector<unsigned>> row1;
                append_column_choices(g.l, u, {}, row1);
                std::vector<SubsetS> bucket;
                for (const auto& z1 : row1) {
                    std::vector<std::vector<unsigned>> row2;
                    append_column_choices(g.l, v, z1, row2);  // disjoint zero columns
                    for (const auto& z2 : row2) {
                        std::vector<unsigned> cells;
                        for (unsigned j : z1) cells.push_back(cell_index(g, 1, j));
                        for (unsigned j : z2) cells.push_back(cell_index(g, 2, j));
                        bucket.push_back(make_subset(g, std::move(cells)));
                    }
                }
                std::sort(bucket.begin(), bucket.end(),
                          [](const SubsetS& a, const SubsetS& b) { return a.cells < b.cells; });
                for (auto& S : bucket) out.push_back(std::move(S));
            }
        }
        return out;
    }
    // general k: per-row zero sets of size <= l-t+1, full-column filter at the
    // end, then global lexicographic order on the member set
    const unsigned cap = g.l - (g.t - 1);
    std::vector<std::vector<std::vector<unsigned>>> per_row(g.k);
    for (unsigned i = 0; i < g.k; ++i) {
        for (unsigned size = 0; size <= cap; ++size) {
            append_column_choices(g.l, size, {}, per_row[i]);
        }
    }
    std::vector<unsigned> cells;
    std::vector<std::size_t> choice(g.k, 0);
    auto rec = [&](auto&& self, unsigned row) -> void {
        if (row == g.k) {
            SubsetS S = make_subset(g, cells);
            if (is_admissible(g, S)) out.push_back(std::move(S));
            return;
        }
        for (const auto& zero_cols : per_row[row]) {
            const std::size_t mark = cells.size();
            for (unsigned j : zero_cols) cells.push_back(cell_index(g, row + 1, j));
            self(self, row + 1);
            cells.resize(mark);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const SubsetS& a, const SubsetS& b) { return a.cells < b.cells; });
    return out;
}

SetsAB sets_AB(const GridShape& g, const SubsetS& S) {
    if (g.k != 2) throw std::invalid_argument("sets_AB: defined only for k = 2");
    return SetsAB{S.A, S.B, S.u, S.v};
}

namespace {

unsigned intersection_size(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> tmp;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
    return static_cast<unsigned>(tmp.size());
}

}  // namespace

unsigned x_of_S(const GridShape& g, const SubsetS& S) {
    if (g.k != 2) throw std::invalid_argument("x_of_S: defined only for k = 2");
    if (S.empty()) throw std::invalid_argument("x_of_S: the empty set is handled separately");
    if (!is_admissible(g, S)) throw std::invalid_argument("x_of_S: subset not admissible");
    const unsigned cap = intersection_size(S.A, S.B);
    const long t = g.t, d = g.d;
    long x;
    if (cap > 0) {
        // |A\B| = v, |B\A| = u for admissible subsets
        long a_minus_b = static_cast<long>(S.A.size()) - cap;
        long b_minus_a = static_cast<long>(S.B.size()) - cap;
        x = std::max({1L, t - 1 - a_minus_b, t - 1 - b_minus_a, 2 * t - 2 - d});
    } else {
        x = std::max(0L, 2 * t - 2 - d);
    }
    return static_cast<unsigned>(x);
}

std::vector<unsigned> maximal_js(const GridShape& g, const SubsetS& S) {
    const unsigned x = x_of_S(g, S);
    const unsigned cap = intersection_size(S.A, S.B);
    const unsigned top = g.t - 2;
    if (x > top) return {};
    unsigned hi;
    if (cap < x) {
        hi = x;
    } else if (cap <= top) {
        hi = cap;
    } else {
        hi = top;
    }
    std::vector<unsigned> out;
    for (unsigned j = x; j <= hi; ++j) out.push_back(j);
    return out;
}

}  // namespace cigrid
