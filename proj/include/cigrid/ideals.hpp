#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cigrid/exactmath.hpp"
#include "cigrid/grid.hpp"
#include "cigrid/matroid.hpp"
#include "cigrid/oracle.hpp"

namespace cigrid {

// Entries of the ambient matrix that must vanish.
struct VariablesFamily {
    std::vector<GridCell> cells;
};

// All r-minors of the submatrix on the given columns (and rows, when
// present; all rows otherwise).  `vacuous` marks families with no minors
// of that size; they are kept for display fidelity but skipped by
// vanishing checks and omitted from emitted scripts.
struct MinorsFamily {
    unsigned r = 0;
    std::vector<unsigned> column_set;
    std::optional<std::vector<unsigned>> row_set;
    bool vacuous = false;
};

// Squarefree monomials, each a set of ambient cells.
struct MonomialsFamily {
    std::vector<std::vector<GridCell>> monomials;
};

using GeneratorFamily = std::variant<VariablesFamily, MinorsFamily, MonomialsFamily>;

struct IdealSpec {
    std::string name;
    std::string ambient_name;  // conventionally "Y" (d x l) or "X" (d x kl)
    unsigned rows = 0;
    unsigned cols = 0;
    std::vector<GeneratorFamily> families;
};

// I_Delta on the d x kl matrix X: t-minors of each row's columns plus
// s-minors of each grid column.
IdealSpec ideal_I_Delta(const GridShape& g);

// I_S_j on the d x l matrix Y (k = 2):
//   I_t(Y_A) + I_t(Y_B) + I_{j+1}(Y_{A∩B}) + I_{2t-j-1}(Y).
IdealSpec ideal_I_S_j(const GridShape& g, const SubsetS& S, unsigned j);

// J_S_j on the d x 2l matrix X (k = 2): the variables on S, the 2-minors
// of each column pair's surviving cells, and the lifted minor families
// on doubled column sets.
IdealSpec ideal_J_S_j(const GridShape& g, const SubsetS& S, unsigned j);

// J_empty on the d x kl matrix X: 2-minors of every grid column plus
// t-minors of X (k = 2 or t = l).
IdealSpec ideal_J_empty(const GridShape& g);

// The squarefree initial ideal of J_empty (k = 2), as its minimal monomial
// generators: the column-pair quadrics together with the diagonal monomials
// that use at most one column per pair.
IdealSpec ideal_initial_J_empty(const GridShape& g);

struct RIntersectionResult {
    IdealSpec fragment;  // one I_{t-r+1} minor family per r-intersection
    std::vector<std::vector<unsigned>> intersections;
    bool forces_empty = false;  // an r = t intersection exists, so F_S is empty
};

// The r-intersections of {S_1, ..., S_k} and their induced minor families.
RIntersectionResult r_intersection_minors(const GridShape& g, const SubsetS& S, unsigned r);

struct PhiParams {
    RatMatrix M{0, 0};   // d x (2t-2-j)
    RatMatrix N1{0, 0};  // (t-1) x u
    RatMatrix N2{0, 0};  // j x (l-u-v)
    RatMatrix N3{0, 0};  // (t-1) x v
};

PhiParams sample_phi_params(const GridShape& g, const SubsetS& S, unsigned j,
                            std::uint64_t seed);

// Column p of the result:
//   M[:,1..t-1]      * N1-column   for p in B\A,
//   M[:,t-j..t-1]    * N2-column   for p in A∩B,
//   M[:,t-j..2t-2-j] * N3-column   for p in A\B.
VectorConfig apply_phi(const GridShape& g, const SubsetS& S, unsigned j,
                       const PhiParams& params);

// Deterministic sample on F_S^j: draws parameters from the seed and
// retries (up to 10 times) until the point has intersection dimension
// exactly j and the flat conditions hold.
VectorConfig sample_phi(const GridShape& g, const SubsetS& S, unsigned j,
                        std::uint64_t seed);

// Lift of a tuple on [l] to a point on [kl]: zero on S, a random nonzero
// multiple of the column's vector elsewhere.
VectorConfig sample_psi(const GridShape& g, const SubsetS& S, const VectorConfig& gamma_l,
                        std::uint64_t seed);

// True iff the point satisfies every family: variables vanish, minor
// families hold rank <= r-1 (vacuous ones skipped), and every monomial
// has a zero cell.  The point supplies one vector per ambient column.
bool check_vanishing(const VectorConfig& point, const IdealSpec& spec);

// Plain-text generator list; grammar documented in the README.
std::string emit_generators(const IdealSpec& spec);

// Inverse of emit_generators.
IdealSpec parse_generators(const std::string& text);

// Macaulay2 script defining the ambient matrix and the ideal.
std::string emit_macaulay2(const IdealSpec& spec);

// dialect is "generators" or "macaulay2".
std::string emit_cas_script(const IdealSpec& spec, const std::string& dialect);

}  // namespace cigrid
