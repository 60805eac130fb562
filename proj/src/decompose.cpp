#include "cigrid/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace cigrid {

namespace {

unsigned long checked_dim(long value, const char* what) {
    if (value < 0) {
        std::ostringstream msg;
        msg << what << ": negative dimension " << value << " (precondition violated)";
        throw std::invalid_argument(msg.str());
    }
    return static_cast<unsigned long>(value);
}

bool in_R_family(const GridShape& g, const SubsetS& S) {
    if (S.cells.size() != g.k) return false;
    std::vector<unsigned> row_hits(g.k + 1, 0), col_hits(g.l + 1, 0);
    for (unsigned p : S.cells) {
        ++row_hits[cell_row(g, p)];
        ++col_hits[cell_col(g, p)];
    }
    for (unsigned i = 1; i <= g.k; ++i) {
        if (row_hits[i] != 1) return false;
    }
    for (unsigned j = 1; j <= g.l; ++j) {
        if (col_hits[j] == g.k) return false;
    }
    return true;
}

void sort_components(std::vector<ComponentDescriptor>& components) {
    std::sort(components.begin(), components.end(),
              [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
                  if (a.S.cells.size() != b.S.cells.size()) {
                      return a.S.cells.size() < b.S.cells.size();
                  }
                  if (a.S.cells != b.S.cells) return a.S.cells < b.S.cells;
                  return a.j < b.j;
              });
}

void fill_top_indices(DecompositionReport& rep) {
    unsigned long best = 0;
    for (const auto& c : rep.components) best = std::max(best, c.dim);
    rep.dim_V_Delta = best;
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        if (rep.components[i].dim == best) rep.top_component_indices.push_back(i);
    }
}

}  // namespace

unsigned long dim_transfer(unsigned long dimF, unsigned k, unsigned l, unsigned sizeS) {
    return checked_dim(static_cast<long>(dimF) + static_cast<long>(l) * (k - 1) -
                           static_cast<long>(sizeS),
                       "dim_transfer");
}

unsigned long dim_V_empty(const GridShape& g) {
    const long k = g.k, l = g.l, t = g.t, d = g.d;
    if (g.k != 2 && g.t != g.l) {
        throw std::invalid_argument("dim_V_empty: requires k = 2 or t = l");
    }
    long value = 0;
    if (g.t == g.l) {
        value = l * (k + d) - d - 1;
        if (g.k == 2) {
            const long k2 = (t - 1) * (d + l - t + 1) + l;
            if (k2 != value) throw CrossCheckError("dim_V_empty: regime formulas disagree");
        }
    } else {
        value = (t - 1) * (d + l - t + 1) + l;
    }
    return checked_dim(value, "dim_V_empty");
}

unsigned long dim_F_S_j(const GridShape& g, const SubsetS& S, unsigned j) {
    if (g.k != 2) throw std::invalid_argument("dim_F_S_j: defined only for k = 2");
    const unsigned x = x_of_S(g, S);
    if (j < x || j + 2 > g.t) {
        throw std::invalid_argument("dim_F_S_j: j outside P(S)");
    }
    const long t = g.t, d = g.d, l = g.l, u = S.u, v = S.v, jj = j;
    const long correction = jj * jj + 2 * (t - 1 - jj) * (t - 1 - jj) + 2 * jj * (t - 1 - jj);
    const long value =
        d * (2 * t - 2 - jj) + (t - 1) * (u + v) + jj * (l - u - v) - correction;
    return checked_dim(value, "dim_F_S_j");
}

unsigned long dim_V_S_j(const GridShape& g, const SubsetS& S, unsigned j) {
    const unsigned long dimF = dim_F_S_j(g, S, j);
    return dim_transfer(dimF, g.k, g.l, static_cast<unsigned>(S.cells.size()));
}

unsigned long dim_V_S_teql(const GridShape& g, const SubsetS& S) {
    if (g.t != g.l) throw std::invalid_argument("dim_V_S_teql: requires t = l");
    if (!in_R_family(g, S)) {
        throw std::invalid_argument("dim_V_S_teql: S must meet every row exactly once "
                                    "with no full column");
    }
    const long k = g.k, l = g.l, d = g.d;
    return checked_dim(l * (k + d - 1) - k, "dim_V_S_teql");
}

unsigned long dim_V_Delta_formula(const GridShape& g) {
    if (g.k != 2) throw std::invalid_argument("dim_V_Delta_formula: defined only for k = 2");
    const long t = g.t, d = g.d, l = g.l;
    const long empty_dim = (t - 1) * (d + l - t + 1) + l;
    long family_dim;
    if (l >= 2 * t - 2) {
        family_dim = (t - 1) * (2 * d - 2 * t + l + 2);
    } else {
        family_dim = d * l + 2 * t - l - 2;
    }
    return checked_dim(std::max(family_dim, empty_dim), "dim_V_Delta_formula");
}

TopComponents top_dimensional_components(const GridShape& g) {
    if (g.k != 2) {
        throw std::invalid_argument("top_dimensional_components: defined only for k = 2");
    }
    const long t = g.t, d = g.d, l = g.l;
    TopComponents top;
    top.j0 = static_cast<unsigned>(
        std::max(0L, 2 * t - 2 - std::min(d, l)));
    if (l >= 2 * t - 2) {
        for (unsigned u = g.t - 1; u + g.t <= g.l + 1; ++u) {
            top.types.emplace_back(u, g.l - u);
        }
    } else {
        top.types.emplace_back(g.l - g.t + 1, g.l - g.t + 1);
    }
    // sign of (dim of the top S-family) - (dim V_empty)
    const long difference = (l >= 2 * t - 2)
                                ? (t - 1) * (d - t + 1) - l
                                : (d - t) * (l - t) - l + d - 1;
    top.include_V_empty = difference <= 0;
    top.s_family_top = difference >= 0;
    return top;
}

DecompositionReport decompose_t_eq_l(const GridShape& g) {
    g.validate();
    if (g.t != g.l) throw std::invalid_argument("decompose_t_eq_l: requires t = l");
    DecompositionReport rep;
    rep.shape = g;
    ComponentDescriptor empty;
    empty.kind = ComponentKind::Empty;
    empty.S = make_subset(g, {});
    empty.dim = dim_V_empty(g);
    rep.components.push_back(std::move(empty));
    // one cell per row: S = {cell(i, f(i))}, skipping constant choices f
    std::vector<unsigned> choice(g.k, 1);
    while (true) {
        bool constant = true;
        for (unsigned i = 1; i < g.k; ++i) {
            if (choice[i] != choice[0]) {
                constant = false;
                break;
            }
        }
        if (!constant) {
            std::vector<unsigned> cells;
            for (unsigned i = 1; i <= g.k; ++i) cells.push_back(cell_index(g, i, choice[i - 1]));
            ComponentDescriptor comp;
            comp.kind = ComponentKind::TEqL;
            comp.S = make_subset(g, std::move(cells));
            comp.dim = dim_V_S_teql(g, comp.S);
            rep.components.push_back(std::move(comp));
        }
        // next function [k] -> [l]
        unsigned pos = 0;
        while (pos < g.k && choice[pos] == g.l) {
            choice[pos] = 1;
            ++pos;
        }
        if (pos == g.k) break;
        ++choice[pos];
    }
    sort_components(rep.components);
    fill_top_indices(rep);
    return rep;
}

DecompositionReport decompose_k2(const GridShape& g) {
    g.validate();
    if (g.k != 2) throw std::invalid_argument("decompose_k2: requires k = 2");
    if (g.d < g.t) throw std::invalid_argument("decompose_k2: requires t <= d");
    DecompositionReport rep;
    rep.shape = g;
    ComponentDescriptor empty;
    empty.kind = ComponentKind::Empty;
    empty.S = make_subset(g, {});
    empty.dim = dim_V_empty(g);
    rep.components.push_back(std::move(empty));
    for (const SubsetS& S : enumerate_admissible(g)) {
        if (S.empty()) continue;
        for (unsigned j : maximal_js(g, S)) {
            ComponentDescriptor comp;
            comp.kind = ComponentKind::KTwo;
            comp.S = S;
            comp.j = j;
            comp.dim = dim_V_S_j(g, S, j);
            rep.components.push_back(std::move(comp));
        }
    }
    sort_components(rep.components);
    fill_top_indices(rep);
    const unsigned long formula = dim_V_Delta_formula(g);
    if (formula != rep.dim_V_Delta) {
        std::ostringstream msg;
        msg << "decompose_k2: dimension formula gives " << formula
            << " but the component maximum is " << rep.dim_V_Delta;
        throw CrossCheckError(msg.str());
    }
    return rep;
}

DecompositionReport decompose(const GridShape& g) {
    g.validate();
    if (g.k == 2 && g.d >= g.t && g.t <= g.l) return decompose_k2(g);
    if (g.t == g.l) return decompose_t_eq_l(g);
    throw std::invalid_argument(
        "decompose: supported shapes are k = 2 (with t <= d) or t = l");
}

}  // namespace cigrid
