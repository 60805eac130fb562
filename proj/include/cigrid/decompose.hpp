#pragma once

#include <string>
#include <vector>

#include "cigrid/grid.hpp"

namespace cigrid {

enum class ComponentKind { Empty, TEqL, KTwo };

struct ComponentDescriptor {
    ComponentKind kind = ComponentKind::Empty;
    SubsetS S;       // empty cells for the Empty kind
    unsigned j = 0;  // KTwo only
    unsigned long dim = 0;
};

struct DecompositionReport {
    GridShape shape;
    std::vector<ComponentDescriptor> components;
    unsigned long dim_V_Delta = 0;
    std::vector<std::size_t> top_component_indices;
};

// V_Delta = V_empty ∪ ⋃_{S in R} V_S where R is the family of subsets
// meeting every row exactly once and containing no full column.
DecompositionReport decompose_t_eq_l(const GridShape& g);

// k = 2: V_empty plus one component per admissible nonempty S and each
// j in maximal_js(S).  Cross-checks the dimension formula against the
// component maximum and throws CrossCheckError on mismatch.
DecompositionReport decompose_k2(const GridShape& g);

// Dispatch on the shape (k = 2 first, else t = l); rejects other shapes.
DecompositionReport decompose(const GridShape& g);

// Dim F_S^j = d(2t-2-j) + (t-1)(u+v) + j(l-u-v)
//             - (j^2 + 2(t-1-j)^2 + 2j(t-1-j)).
unsigned long dim_F_S_j(const GridShape& g, const SubsetS& S, unsigned j);

// Dim V_S^j = Dim F_S^j + l - (u+v).
unsigned long dim_V_S_j(const GridShape& g, const SubsetS& S, unsigned j);

// Dim V_{S,i} = Dim F_{S,i} + l(k-1) - |S|.
unsigned long dim_transfer(unsigned long dimF, unsigned k, unsigned l, unsigned sizeS);

// k = 2: (t-1)(d+l-t+1) + l;  t = l: l(k+d) - d - 1.  When both regimes
// apply the two formulas are asserted equal.
unsigned long dim_V_empty(const GridShape& g);

// t = l, S in R: l(k+d-1) - k.
unsigned long dim_V_S_teql(const GridShape& g, const SubsetS& S);

// k = 2 casework maximum:
//   l >= 2t-2: max{(t-1)(2d-2t+l+2), (t-1)(d+l-t+1)+l}
//   l <  2t-2: max{dl+2t-l-2,        (t-1)(d+l-t+1)+l}
unsigned long dim_V_Delta_formula(const GridShape& g);

struct TopComponents {
    std::vector<std::pair<unsigned, unsigned>> types;  // (u, v)
    unsigned j0 = 0;
    bool include_V_empty = false;  // V_empty ties or exceeds the S-family
    bool s_family_top = false;     // the S-family ties or exceeds V_empty
};

// The (u,v) types and j0 of the top-dimensional V_S^j family, plus
// whether V_empty ties or wins (k = 2).
TopComponents top_dimensional_components(const GridShape& g);

}  // namespace cigrid
