#pragma once

#include <string>
#include <vector>

#include "cigrid/exactmath.hpp"
#include "cigrid/grid.hpp"

namespace cigrid {

// One vector in Q^d per element of an ordered ground set.
struct VectorConfig {
    unsigned d = 0;
    std::vector<std::vector<Rat>> vectors;

    std::size_t size() const { return vectors.size(); }
    bool vector_is_zero(std::size_t idx) const;
    void validate() const;  // every vector has length d
};

// Matroid with a rank oracle, backed either by a rational vector
// configuration or by an explicit circuit list.  Ground set is [n],
// elements 1-based.
class MatroidView {
public:
    static MatroidView from_vectors(VectorConfig config);
    static MatroidView from_circuits(unsigned ground_size,
                                     std::vector<std::vector<unsigned>> circuits);

    unsigned ground_size() const { return n_; }
    std::size_t rank(const std::vector<unsigned>& subset) const;
    std::size_t rank_full() const;
    bool is_independent(const std::vector<unsigned>& subset) const;
    std::vector<unsigned> closure(const std::vector<unsigned>& subset) const;
    bool is_flat(const std::vector<unsigned>& subset) const;

private:
    MatroidView() = default;

    unsigned n_ = 0;
    bool vector_backed_ = true;
    VectorConfig config_;
    std::vector<std::vector<unsigned>> circuits_;  // each sorted ascending
};

// M_gamma: the matroid on [l] induced by a point of V_Delta, taking one
// representative vector per column (the first nonzero one in cell order;
// any two nonzero vectors in a column must be proportional).
MatroidView matroid_from_point(const GridShape& g, const VectorConfig& gamma);

// The representative tuple itself (one vector per column, zero vector for
// all-zero columns), exposed so membership tests on F_S can reuse it.
VectorConfig column_representatives(const GridShape& g, const VectorConfig& gamma);

// gamma in V_Delta: every Delta-edge's cell set is rank-deficient.
bool in_V_Delta(const GridShape& g, const VectorConfig& gamma);

// gamma in U_S: zero cells are exactly S, and each surviving-column set
// S_i is a flat of rank t-1 in M_gamma.  Precondition: gamma in V_Delta.
bool in_U_S(const GridShape& g, const VectorConfig& gamma, const SubsetS& S);

// gamma_l in F_S: all l vectors nonzero and each S_i a flat of rank t-1
// in the matroid of the tuple.
bool in_F_S(const GridShape& g, const VectorConfig& gamma_l, const SubsetS& S);

// dim(Span gamma_A  ∩  Span gamma_B) via rank(A) + rank(B) - rank(A ∪ B).
std::size_t span_intersection_dim(const VectorConfig& gamma_l,
                                  const std::vector<unsigned>& A,
                                  const std::vector<unsigned>& B);

// gamma_l in F_S^j: F_S membership plus intersection dimension exactly j
// (k = 2 only).
bool in_F_S_j(const GridShape& g, const VectorConfig& gamma_l, const SubsetS& S,
              unsigned j);

// Antichain of nonempty subsets of [n].
struct CircuitFamily {
    unsigned ground_size = 0;
    std::vector<std::vector<unsigned>> circuits;  // each sorted ascending
};

// Circuits of the quasi-product matroid on [k*l]: the inclusion-minimal
// elements of Delta^{s,t} together with all (d+1)-subsets.  Requires
// d <= s+t-3.
CircuitFamily quasi_product_circuits(unsigned k, unsigned l, unsigned s, unsigned t,
                                     unsigned d);

// Exhaustive check of the circuit axioms: no empty set, antichain, and
// circuit elimination for every pair and common element.
bool verify_circuit_axioms(const CircuitFamily& c);

// Matroid defined by a circuit family (greedy rank oracle).
MatroidView matroid_from_circuits(const CircuitFamily& c);

// The restriction of a circuit-defined matroid to `ground` is the uniform
// matroid of the given rank: every subset of size <= rank independent,
// every larger subset dependent.  Exhaustive over subsets of `ground`.
bool restriction_is_uniform(const MatroidView& m, const std::vector<unsigned>& ground,
                            std::size_t rank);

}  // namespace cigrid
