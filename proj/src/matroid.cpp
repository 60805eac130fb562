#include "cigrid/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cigrid {

bool VectorConfig::vector_is_zero(std::size_t idx) const {
    for (const Rat& x : vectors.at(idx)) {
        if (x != 0) return false;
    }
    return true;
}

void VectorConfig::validate() const {
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("VectorConfig: vector of wrong dimension");
    }
}

MatroidView MatroidView::from_vectors(VectorConfig config) {
    config.validate();
    MatroidView m;
    m.n_ = static_cast<unsigned>(config.vectors.size());
    m.vector_backed_ = true;
    m.config_ = std::move(config);
    return m;
}

MatroidView MatroidView::from_circuits(unsigned ground_size,
                                       std::vector<std::vector<unsigned>> circuits) {
    for (auto& c : circuits) {
        std::sort(c.begin(), c.end());
        for (unsigned e : c) {
            if (e < 1 || e > ground_size) {
                throw std::invalid_argument("from_circuits: element out of range");
            }
        }
    }
    MatroidView m;
    m.n_ = ground_size;
    m.vector_backed_ = false;
    m.circuits_ = std::move(circuits);
    return m;
}

namespace {

bool sorted_subset_of(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::size_t MatroidView::rank(const std::vector<unsigned>& subset) const {
    for (unsigned e : subset) {
        if (e < 1 || e > n_) throw std::invalid_argument("rank: element out of range");
    }
    if (vector_backed_) {
        RatMatrix m(config_.d, subset.size());
        for (std::size_t c = 0; c < subset.size(); ++c) {
            const auto& v = config_.vectors[subset[c] - 1];
            for (unsigned r = 0; r < config_.d; ++r) m.at(r, c) = v[r];
        }
        return rank_rational(std::move(m));
    }
    // greedy independence over the circuit list
    std::vector<unsigned> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<unsigned> indep;
    for (unsigned e : sorted) {
        std::vector<unsigned> trial = indep;
        trial.insert(std::lower_bound(trial.begin(), trial.end(), e), e);
        bool contains_circuit = false;
        for (const auto& c : circuits_) {
            if (sorted_subset_of(c, trial)) {
                contains_circuit = true;
                break;
            }
        }
        if (!contains_circuit) indep = std::move(trial);
    }
    return indep.size();
}

std::size_t MatroidView::rank_full() const {
    std::vector<unsigned> all(n_);
    for (unsigned e = 1; e <= n_; ++e) all[e - 1] = e;
    return rank(all);
}

bool MatroidView::is_independent(const std::vector<unsigned>& subset) const {
    return rank(subset) == subset.size();
}

std::vector<unsigned> MatroidView::closure(const std::vector<unsigned>& subset) const {
    const std::size_t r = rank(subset);
    std::vector<unsigned> out;
    std::vector<unsigned> trial = subset;
    for (unsigned e = 1; e <= n_; ++e) {
        if (std::find(subset.begin(), subset.end(), e) != subset.end()) {
            out.push_back(e);
            continue;
        }
        trial.push_back(e);
        if (rank(trial) == r) out.push_back(e);
        trial.pop_back();
    }
    return out;
}

bool MatroidView::is_flat(const std::vector<unsigned>& subset) const {
    std::vector<unsigned> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    return closure(sorted) == sorted;
}

VectorConfig column_representatives(const GridShape& g, const VectorConfig& gamma) {
    gamma.validate();
    if (gamma.size() != g.cells()) {
        throw std::invalid_argument("column_representatives: expected one vector per cell");
    }
    VectorConfig reps;
    reps.d = gamma.d;
    for (unsigned j = 1; j <= g.l; ++j) {
        std::vector<unsigned> nonzero;
        for (unsigned p : column_cells(g, j)) {
            if (!gamma.vector_is_zero(p - 1)) nonzero.push_back(p);
        }
        // every pair of nonzero vectors in a column must be proportional
        if (nonzero.size() >= 2) {
            RatMatrix m(gamma.d, nonzero.size());
            for (std::size_t c = 0; c < nonzero.size(); ++c) {
                for (unsigned r = 0; r < gamma.d; ++r) {
                    m.at(r, c) = gamma.vectors[nonzero[c] - 1][r];
                }
            }
            if (rank_rational(std::move(m)) > 1) {
                std::ostringstream msg;
                msg << "column " << j << " holds non-proportional nonzero vectors; "
                    << "the induced matroid is undefined for this point";
                throw std::invalid_argument(msg.str());
            }
        }
        if (nonzero.empty()) {
            reps.vectors.emplace_back(gamma.d, Rat(0));
        } else {
            reps.vectors.push_back(gamma.vectors[nonzero.front() - 1]);
        }
    }
    return reps;
}

MatroidView matroid_from_point(const GridShape& g, const VectorConfig& gamma) {
    return MatroidView::from_vectors(column_representatives(g, gamma));
}

bool in_V_Delta(const GridShape& g, const VectorConfig& gamma) {
    gamma.validate();
    if (gamma.size() != g.cells()) {
        throw std::invalid_argument("in_V_Delta: expected one vector per cell");
    }
    const MatroidView m = MatroidView::from_vectors(gamma);
    const Hypergraph delta = delta_hypergraph(g);
    for (const auto& edge : delta.edges) {
        if (m.rank(edge) >= edge.size()) return false;
    }
    return true;
}

bool in_U_S(const GridShape& g, const VectorConfig& gamma, const SubsetS& S) {
    gamma.validate();
    if (gamma.size() != g.cells()) {
        throw std::invalid_argument("in_U_S: expected one vector per cell");
    }
    // zero cells must be exactly S
    std::vector<char> in_S(g.cells() + 1, 0);
    for (unsigned p : S.cells) in_S[p] = 1;
    for (unsigned p = 1; p <= g.cells(); ++p) {
        if (gamma.vector_is_zero(p - 1) != static_cast<bool>(in_S[p])) return false;
    }
    const MatroidView m = matroid_from_point(g, gamma);
    for (unsigned i = 0; i < g.k; ++i) {
        const auto& Si = S.surviving_columns[i];
        if (m.rank(Si) != g.t - 1) return false;
        if (!m.is_flat(Si)) return false;
    }
    return true;
}

bool in_F_S(const GridShape& g, const VectorConfig& gamma_l, const SubsetS& S) {
    gamma_l.validate();
    if (gamma_l.size() != g.l) {
        throw std::invalid_argument("in_F_S: expected one vector per column");
    }
    for (std::size_t i = 0; i < gamma_l.size(); ++i) {
        if (gamma_l.vector_is_zero(i)) return false;
    }
    const MatroidView m = MatroidView::from_vectors(gamma_l);
    for (unsigned i = 0; i < g.k; ++i) {
        const auto& Si = S.surviving_columns[i];
        if (m.rank(Si) != g.t - 1) return false;
        if (!m.is_flat(Si)) return false;
    }
    return true;
}

std::size_t span_intersection_dim(const VectorConfig& gamma_l,
                                  const std::vector<unsigned>& A,
                                  const std::vector<unsigned>& B) {
    const MatroidView m = MatroidView::from_vectors(gamma_l);
    std::vector<unsigned> both;
    std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(both));
    return m.rank(A) + m.rank(B) - m.rank(both);
}

bool in_F_S_j(const GridShape& g, const VectorConfig& gamma_l, const SubsetS& S,
              unsigned j) {
    if (g.k != 2) throw std::invalid_argument("in_F_S_j: defined only for k = 2");
    if (!in_F_S(g, gamma_l, S)) return false;
    return span_intersection_dim(gamma_l, S.A, S.B) == j;
}

namespace {

void append_all_subsets_of_size(unsigned n, unsigned r,
                                std::vector<std::vector<unsigned>>& out) {
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
    if (r <= n) rec(rec, 1, 0);
}

}  // namespace

CircuitFamily quasi_product_circuits(unsigned k, unsigned l, unsigned s, unsigned t,
                                     unsigned d) {
    if (k < 1 || l < 1 || s < 2 || t < 2 || d < 1) {
        throw std::invalid_argument("quasi_product_circuits: parameters out of range");
    }
    if (d + 3 > s + t) {
        throw std::invalid_argument("quasi_product_circuits: requires d <= s+t-3");
    }
    if (s > k || t > l) {
        throw std::invalid_argument("quasi_product_circuits: requires s <= k and t <= l");
    }
    GridShape g{k, l, t, d, s};
    std::vector<std::vector<unsigned>> pool = delta_hypergraph(g).edges;
    std::vector<std::vector<unsigned>> complete;
    append_all_subsets_of_size(k * l, d + 1, complete);
    pool.insert(pool.end(), complete.begin(), complete.end());
    for (auto& e : pool) std::sort(e.begin(), e.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    CircuitFamily fam;
    fam.ground_size = k * l;
    for (const auto& e : pool) {
        bool minimal = true;
        for (const auto& other : pool) {
            if (other.size() < e.size() && sorted_subset_of(other, e)) {
                minimal = false;
                break;
            }
        }
        if (minimal) fam.circuits.push_back(e);
    }
    std::sort(fam.circuits.begin(), fam.circuits.end(),
              [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return fam;
}

bool verify_circuit_axioms(const CircuitFamily& c) {
    for (const auto& circ : c.circuits) {
        if (circ.empty()) return false;
        if (!std::is_sorted(circ.begin(), circ.end())) return false;
    }
    // antichain
    for (std::size_t a = 0; a < c.circuits.size(); ++a) {
        for (std::size_t b = 0; b < c.circuits.size(); ++b) {
            if (a == b) continue;
            if (sorted_subset_of(c.circuits[a], c.circuits[b])) return false;
        }
    }
    // elimination: C1 != C2, e in C1 ∩ C2  =>  some circuit inside (C1 ∪ C2) \ {e}
    for (std::size_t a = 0; a < c.circuits.size(); ++a) {
        for (std::size_t b = a + 1; b < c.circuits.size(); ++b) {
            const auto& c1 = c.circuits[a];
            const auto& c2 = c.circuits[b];
            std::vector<unsigned> common;
            std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            std::vector<unsigned> united;
            std::set_union(c1.begin(), c1.end(), c2.begin(), c2.end(),
                           std::back_inserter(united));
            for (unsigned e : common) {
                std::vector<unsigned> target;
                for (unsigned x : united) {
                    if (x != e) target.push_back(x);
                }
                bool found = false;
                for (const auto& c3 : c.circuits) {
                    if (sorted_subset_of(c3, target)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

MatroidView matroid_from_circuits(const CircuitFamily& c) {
    return MatroidView::from_circuits(c.ground_size, c.circuits);
}

bool restriction_is_uniform(const MatroidView& m, const std::vector<unsigned>& ground,
                            std::size_t rank) {
    const std::size_t n = ground.size();
    if (n > 20) throw std::invalid_argument("restriction_is_uniform: ground set too large");
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<unsigned> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t(1) << i)) subset.push_back(ground[i]);
        }
        const bool expect_independent = subset.size() <= rank;
        if (m.is_independent(subset) != expect_independent) return false;
    }
    return true;
}

}  // namespace cigrid
