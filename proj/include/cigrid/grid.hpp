#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

namespace cigrid {

// Raised when two independently computed quantities that must agree do not.
// The CLI maps it to exit status 3.
struct CrossCheckError : std::exception {
    explicit CrossCheckError(std::string msg) : message(std::move(msg)) {}
    const char* what() const noexcept override { return message.c_str(); }
    std::string message;
};

struct GridShape {
    unsigned k = 0;  // rows of the parameter grid
    unsigned l = 0;  // columns of the parameter grid
    unsigned t = 0;  // row-minor size
    unsigned d = 0;  // ambient vector dimension
    unsigned s = 2;  // column-minor size

    unsigned cells() const { return k * l; }

    // k >= 1, 2 <= t <= l, s >= 2, d >= 1. Throws std::invalid_argument.
    void validate() const;
    // validate() plus: t == l, or k == 2 with d >= t.
    void validate_decomposition() const;
};

// Cells of the k x l grid are numbered 1..k*l column-major: p = (j-1)*k + i.
unsigned cell_index(const GridShape& g, unsigned i, unsigned j);
unsigned cell_row(const GridShape& g, unsigned p);
unsigned cell_col(const GridShape& g, unsigned p);

// R_i = {i, k+i, ..., (l-1)k+i}; C_j = {(j-1)k+1, ..., jk}. 1-based.
std::vector<unsigned> row_cells(const GridShape& g, unsigned i);
std::vector<unsigned> column_cells(const GridShape& g, unsigned j);

struct Hypergraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<unsigned>> edges;  // each sorted ascending

    // Sorts each edge, then sorts and deduplicates the edge list.
    void normalize();
};

// Edge set: all t-subsets of every row plus all s-subsets of every column,
// on the vertex set [k*l].
Hypergraph delta_hypergraph(const GridShape& g);

struct SubsetS {
    std::vector<unsigned> cells;  // sorted 1-based cell indices

    // surviving_columns[i-1] = {j : cell (i,j) not in the set}; the paper-side
    // per-row column sets that must become flats.
    std::vector<std::vector<unsigned>> surviving_columns;

    // k = 2 extras: A = surviving columns of row 1, B = of row 2,
    // u = |S ∩ R_1|, v = |S ∩ R_2|.
    std::vector<unsigned> A, B;
    unsigned u = 0, v = 0;

    bool empty() const { return cells.empty(); }
};

SubsetS make_subset(const GridShape& g, std::vector<unsigned> cells);

// |R_i \ S| >= t-1 for every row, and no column fully contained in S.
bool is_admissible(const GridShape& g, const SubsetS& S);

// Every admissible subset exactly once (the empty set included). For k = 2
// the order is by type (u, v), u-major then v, subsets lexicographic within
// a type; otherwise globally lexicographic on the member set.
std::vector<SubsetS> enumerate_admissible(const GridShape& g);

// (A, B, u, v) for k = 2; throws for other k.
struct SetsAB {
    std::vector<unsigned> A, B;
    unsigned u = 0, v = 0;
};
SetsAB sets_AB(const GridShape& g, const SubsetS& S);

// Minimum feasible intersection dimension for a nonempty admissible subset
// (k = 2): max{1, t-1-|A\B|, t-1-|B\A|, 2t-2-d} when A∩B is nonempty, else
// max{0, 2t-2-d}. The feasible interval is then [x, t-2].
unsigned x_of_S(const GridShape& g, const SubsetS& S);

// The intersection dimensions whose strata are maximal:
//   {}            if x > t-2
//   {x}           if |A∩B| < x
//   [x, |A∩B|]    if x <= |A∩B| <= t-2
//   [x, t-2]      if |A∩B| > t-2
std::vector<unsigned> maximal_js(const GridShape& g, const SubsetS& S);

}  // namespace cigrid
