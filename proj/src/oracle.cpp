#include "cigrid/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cigrid {

unsigned cell_to_vertex(unsigned ncols, const GridCell& c) {
    if (c.row < 1 || c.col < 1 || c.col > ncols) {
        throw std::invalid_argument("cell_to_vertex: cell out of range");
    }
    return (c.row - 1) * ncols + c.col;
}

GridCell vertex_to_cell(unsigned ncols, unsigned v) {
    if (v < 1) throw std::invalid_argument("vertex_to_cell: vertex out of range");
    return GridCell{(v - 1) / ncols + 1, (v - 1) % ncols + 1};
}

namespace {

void subsets_of_interval(unsigned n, unsigned r, std::vector<std::vector<unsigned>>& out) {
    if (r > n) return;
    std::vector<unsigned> pick(r);
    auto rec = [&](auto&& self, unsigned start, unsigned depth) -> void {
        if (depth == r) {
            out.push_back(pick);
            return;
        }
        for (unsigned e = start; e + (r - depth) <= n + 1; ++e) {
            pick[depth] = e;
            self(self, e + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
}

}  // namespace

Hypergraph hypergraph_A(unsigned d, unsigned l, unsigned t) {
    if (t < 2 || t > d || t > l) {
        throw std::invalid_argument("hypergraph_A: requires 2 <= t <= min(d,l)");
    }
    std::vector<std::vector<unsigned>> row_sets, col_sets;
    subsets_of_interval(d, t, row_sets);
    subsets_of_interval(l, t, col_sets);
    Hypergraph h;
    h.vertex_count = static_cast<std::size_t>(d) * l;
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            std::vector<unsigned> edge;
            for (unsigned i = 0; i < t; ++i) {
                edge.push_back(cell_to_vertex(l, GridCell{rs[i], cs[i]}));
            }
            h.edges.push_back(std::move(edge));
        }
    }
    h.normalize();
    return h;
}

Hypergraph hypergraph_B_diagonals(unsigned d, unsigned l, unsigned t) {
    if (t < 2 || t > d || t > l) {
        throw std::invalid_argument("hypergraph_B_diagonals: requires 2 <= t <= min(d,l)");
    }
    std::vector<std::vector<unsigned>> row_sets, pair_sets;
    subsets_of_interval(d, t, row_sets);
    subsets_of_interval(l, t, pair_sets);
    // one column out of each chosen pair {2p-1, 2p}
    Hypergraph h;
    h.vertex_count = static_cast<std::size_t>(d) * 2 * l;
    for (const auto& rs : row_sets) {
        for (const auto& ps : pair_sets) {
            for (unsigned mask = 0; mask < (1u << t); ++mask) {
                std::vector<unsigned> edge;
                for (unsigned i = 0; i < t; ++i) {
                    const unsigned col = 2 * ps[i] - ((mask >> i) & 1u);
                    edge.push_back(cell_to_vertex(2 * l, GridCell{rs[i], col}));
                }
                h.edges.push_back(std::move(edge));
            }
        }
    }
    h.normalize();
    return h;
}

Hypergraph hypergraph_C_pairs(unsigned d, unsigned l) {
    Hypergraph h;
    h.vertex_count = static_cast<std::size_t>(d) * 2 * l;
    for (unsigned j = 1; j <= l; ++j) {
        for (unsigned i = 1; i < d; ++i) {
            for (unsigned i2 = i + 1; i2 <= d; ++i2) {
                h.edges.push_back({cell_to_vertex(2 * l, GridCell{i, 2 * j - 1}),
                                   cell_to_vertex(2 * l, GridCell{i2, 2 * j})});
            }
        }
    }
    h.normalize();
    return h;
}

Hypergraph hypergraph_B(unsigned d, unsigned l, unsigned t) {
    Hypergraph h = hypergraph_B_diagonals(d, l, t);
    Hypergraph c = hypergraph_C_pairs(d, l);
    h.edges.insert(h.edges.end(), c.edges.begin(), c.edges.end());
    h.normalize();
    return h;
}

bool is_transversal(const Hypergraph& h, const std::vector<unsigned>& vertices) {
    std::vector<char> has(h.vertex_count + 1, 0);
    for (unsigned v : vertices) has.at(v) = 1;
    for (const auto& e : h.edges) {
        bool hit = false;
        for (unsigned v : e) {
            if (has[v]) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

namespace {

// Branch-and-bound enumeration of minimal transversals.  A branch picks an
// uncovered edge, then tries each of its still-available vertices in turn,
// permanently excluding the previously tried ones, so no transversal is
// produced twice.  crit[w] tracks the edges only w covers; once some chosen
// vertex loses its last critical edge the branch cannot reach a minimal
// transversal and is pruned.
struct TransversalSearch {
    const std::vector<std::vector<unsigned>>& edges;
    std::vector<std::vector<std::size_t>> incident;  // vertex -> edge indices
    std::vector<char> available;
    std::vector<unsigned> chosen;
    std::vector<std::vector<std::size_t>> crit;  // per chosen vertex, parallel to `chosen`
    std::vector<char> covered;
    std::size_t uncovered_count = 0;
    std::vector<std::vector<unsigned>> result;

    explicit TransversalSearch(const Hypergraph& h) : edges(h.edges) {
        incident.assign(h.vertex_count + 1, {});
        for (std::size_t e = 0; e < edges.size(); ++e) {
            for (unsigned v : edges[e]) incident[v].push_back(e);
        }
        available.assign(h.vertex_count + 1, 1);
        covered.assign(edges.size(), 0);
        uncovered_count = edges.size();
    }

    // the uncovered edge with the fewest available vertices
    std::size_t pick_edge() const {
        std::size_t best = edges.size();
        std::size_t best_count = SIZE_MAX;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (covered[e]) continue;
            std::size_t count = 0;
            for (unsigned v : edges[e]) {
                if (available[v]) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best = e;
            }
        }
        return best;
    }

    void run() {
        if (uncovered_count == 0) {
            result.push_back(chosen);
            return;
        }
        const std::size_t e = pick_edge();
        std::vector<unsigned> branch_vertices;
        for (unsigned v : edges[e]) {
            if (available[v]) branch_vertices.push_back(v);
        }
        std::vector<unsigned> excluded;
        for (unsigned v : branch_vertices) {
            if (try_vertex(v)) run();
            undo_vertex();
            available[v] = 0;  // later branches must not reuse v
            excluded.push_back(v);
        }
        for (unsigned v : excluded) available[v] = 1;
    }

    // state saved per chosen vertex so undo is exact
    struct Frame {
        std::vector<std::size_t> newly_covered;
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> crit_before;
    };
    std::vector<Frame> frames;

    bool try_vertex(unsigned v) {
        Frame f;
        for (std::size_t e : incident[v]) {
            if (!covered[e]) {
                f.newly_covered.push_back(e);
            }
        }
        // shrink earlier critical lists: edges covered by v are no longer
        // critical for their previous sole coverer
        bool pruned = false;
        for (std::size_t idx = 0; idx < chosen.size(); ++idx) {
            std::vector<std::size_t> kept;
            bool changed = false;
            for (std::size_t e : crit[idx]) {
                bool v_covers = std::find(edges[e].begin(), edges[e].end(), v) != edges[e].end();
                if (v_covers) {
                    changed = true;
                } else {
                    kept.push_back(e);
                }
            }
            if (changed) {
                f.crit_before.emplace_back(idx, crit[idx]);
                crit[idx] = std::move(kept);
                if (crit[idx].empty()) pruned = true;
            }
        }
        for (std::size_t e : f.newly_covered) {
            covered[e] = 1;
            --uncovered_count;
        }
        chosen.push_back(v);
        crit.push_back(f.newly_covered);
        frames.push_back(std::move(f));
        return !pruned;
    }

    void undo_vertex() {
        Frame f = std::move(frames.back());
        frames.pop_back();
        crit.pop_back();
        chosen.pop_back();
        for (std::size_t e : f.newly_covered) {
            covered[e] = 0;
            ++uncovered_count;
        }
        for (auto& [idx, before] : f.crit_before) crit[idx] = std::move(before);
    }
};

}  // namespace

std::vector<std::vector<unsigned>> minimal_transversals(const Hypergraph& h) {
    for (const auto& e : h.edges) {
        if (e.empty()) throw std::invalid_argument("minimal_transversals: empty edge");
    }
    if (h.edges.empty()) return {{}};
    TransversalSearch search(h);
    search.run();
    for (auto& tr : search.result) std::sort(tr.begin(), tr.end());
    std::sort(search.result.begin(), search.result.end());
    assert(std::adjacent_find(search.result.begin(), search.result.end()) ==
           search.result.end());
    return search.result;
}

namespace {

void enumerate_paths_from(unsigned d, unsigned end_col,
                          const std::vector<std::vector<char>>& used, WSPath& current,
                          std::vector<WSPath>& out) {
    const GridCell at = current.cells.back();  // by value: push_back below reallocates
    if (at.row == d && at.col == end_col) {
        out.push_back(current);
        return;
    }
    // South first, then West, for a deterministic order
    if (at.row < d) {
        GridCell next{at.row + 1, at.col};
        if (!used[next.row][next.col]) {
            current.cells.push_back(next);
            enumerate_paths_from(d, end_col, used, current, out);
            current.cells.pop_back();
        }
    }
    if (at.col > end_col) {
        GridCell next{at.row, at.col - 1};
        if (!used[next.row][next.col]) {
            current.cells.push_back(next);
            enumerate_paths_from(d, end_col, used, current, out);
            current.cells.pop_back();
        }
    }
}

void extend_family(unsigned d, unsigned l, unsigned t, unsigned index,
                   std::vector<std::vector<char>>& used, PathFamily& current,
                   std::vector<PathFamily>& out) {
    if (index == t) {
        out.push_back(current);
        return;
    }
    const GridCell start{index, l};
    if (used[start.row][start.col]) return;
    WSPath seed;
    seed.cells.push_back(start);
    std::vector<WSPath> candidates;
    enumerate_paths_from(d, index, used, seed, candidates);
    for (const WSPath& p : candidates) {
        for (const GridCell& c : p.cells) used[c.row][c.col] = 1;
        current.paths.push_back(p);
        extend_family(d, l, t, index + 1, used, current, out);
        current.paths.pop_back();
        for (const GridCell& c : p.cells) used[c.row][c.col] = 0;
    }
}

}  // namespace

std::vector<PathFamily> enumerate_path_families(unsigned d, unsigned l, unsigned t) {
    if (t < 2 || t > d || t > l) {
        throw std::invalid_argument("enumerate_path_families: requires 2 <= t <= min(d,l)");
    }
    std::vector<std::vector<char>> used(d + 1, std::vector<char>(l + 1, 0));
    PathFamily current{d, l, t, {}};
    std::vector<PathFamily> out;
    extend_family(d, l, t, 1, used, current, out);
    return out;
}

Int family_weight(const PathFamily& f) {
    std::vector<std::vector<char>> used(f.d + 1, std::vector<char>(f.l + 1, 0));
    for (const WSPath& p : f.paths) {
        for (const GridCell& c : p.cells) used[c.row][c.col] = 1;
    }
    Int w = 1;
    for (unsigned col = 1; col <= f.l; ++col) {
        unsigned count = 0;
        for (unsigned row = 1; row <= f.d; ++row) count += used[row][col];
        w *= count;
    }
    return w;
}

std::vector<GridCell> complement_of_family(const PathFamily& f) {
    std::vector<std::vector<char>> used(f.d + 1, std::vector<char>(f.l + 1, 0));
    for (const WSPath& p : f.paths) {
        for (const GridCell& c : p.cells) used[c.row][c.col] = 1;
    }
    std::vector<GridCell> out;
    for (unsigned row = 1; row <= f.d; ++row) {
        for (unsigned col = 1; col <= f.l; ++col) {
            if (!used[row][col]) out.push_back(GridCell{row, col});
        }
    }
    return out;
}

std::vector<GridCell> pi_map(const std::vector<GridCell>& A) {
    std::vector<GridCell> sorted = A;
    std::sort(sorted.begin(), sorted.end());
    std::vector<GridCell> out;
    for (const GridCell& c : sorted) {
        if (c.col % 2 == 1) {
            const GridCell partner{c.row, c.col + 1};
            if (std::binary_search(sorted.begin(), sorted.end(), partner)) {
                out.push_back(GridCell{c.row, (c.col + 1) / 2});
            }
        }
    }
    return out;
}

Int multiplicity_m(unsigned d, unsigned l, const std::vector<GridCell>& A) {
    std::vector<unsigned> per_column(l + 1, 0);
    for (const GridCell& c : A) {
        if (c.row < 1 || c.row > d || c.col < 1 || c.col > l) {
            throw std::invalid_argument("multiplicity_m: cell out of range");
        }
        ++per_column[c.col];
    }
    Int m = 1;
    for (unsigned col = 1; col <= l; ++col) {
        m *= Int(static_cast<long>(d) - static_cast<long>(per_column[col]));
    }
    return m;
}

}  // namespace cigrid
