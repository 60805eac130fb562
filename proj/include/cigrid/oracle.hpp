#pragma once

#include <vector>

#include "cigrid/exactmath.hpp"
#include "cigrid/grid.hpp"

namespace cigrid {

// A cell of a d x m grid, 1-based.
struct GridCell {
    unsigned row = 0;
    unsigned col = 0;

    friend bool operator==(const GridCell& a, const GridCell& b) {
        return a.row == b.row && a.col == b.col;
    }
    friend bool operator<(const GridCell& a, const GridCell& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

// Row-major vertex numbering for hypergraphs on a d x m grid.
unsigned cell_to_vertex(unsigned ncols, const GridCell& c);
GridCell vertex_to_cell(unsigned ncols, unsigned v);

// A_t: diagonals of the t x t submatrices of the d x l grid.
Hypergraph hypergraph_A(unsigned d, unsigned l, unsigned t);

// B_t: diagonals of t x t submatrices of the d x 2l grid using at most one
// column from each pair {2i-1, 2i}.
Hypergraph hypergraph_B_diagonals(unsigned d, unsigned l, unsigned t);

// C_t: the pairs {(i,2j-1), (i',2j)} with i < i', one per column pair.
Hypergraph hypergraph_C_pairs(unsigned d, unsigned l);

// The union B_t ∪ C_t on the d x 2l grid.
Hypergraph hypergraph_B(unsigned d, unsigned l, unsigned t);

bool is_transversal(const Hypergraph& h, const std::vector<unsigned>& vertices);

// All inclusion-minimal transversals, each sorted ascending, the list
// sorted lexicographically.  Rejects hypergraphs with an empty edge.
std::vector<std::vector<unsigned>> minimal_transversals(const Hypergraph& h);

// Lattice path moving only South (+1 row) or West (-1 col).
struct WSPath {
    std::vector<GridCell> cells;
};

// t-1 pairwise disjoint WS paths; the i-th starts at (i, l), ends at (d, i).
struct PathFamily {
    unsigned d = 0;
    unsigned l = 0;
    unsigned t = 0;
    std::vector<WSPath> paths;
};

std::vector<PathFamily> enumerate_path_families(unsigned d, unsigned l, unsigned t);

// Product over columns of the number of cells the family occupies there.
Int family_weight(const PathFamily& f);

// The cells of the d x l grid not used by any path, sorted.
std::vector<GridCell> complement_of_family(const PathFamily& f);

// pi(A) = {(i,j) : (i,2j-1) and (i,2j) both in A}, for A in the d x 2l grid.
std::vector<GridCell> pi_map(const std::vector<GridCell>& A);

// m(A) = product over columns i of (d - |A ∩ column i|), for A in d x l.
Int multiplicity_m(unsigned d, unsigned l, const std::vector<GridCell>& A);

}  // namespace cigrid
