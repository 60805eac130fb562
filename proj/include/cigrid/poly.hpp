#pragma once

#include "cigrid/exactmath.hpp"

#include <map>
#include <string>
#include <vector>

namespace cigrid {

// Sparse multivariate polynomial with Int coefficients over a fixed variable
// count. Terms are kept in a map ordered lexicographically on the exponent
// vector, so iteration and serialization are deterministic.
class SparsePoly {
public:
    using Exp = std::vector<unsigned>;

    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

    static SparsePoly constant(std::size_t nvars, const Int& c);
    static SparsePoly monomial(std::size_t nvars, const Exp& e, const Int& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Int>& terms() const { return terms_; }

    // Merges into the term map; drops the term if the coefficient cancels.
    void add_term(const Exp& e, const Int& c);

    Int coefficient(const Exp& e) const;

    SparsePoly operator+(const SparsePoly& rhs) const;
    SparsePoly operator-(const SparsePoly& rhs) const;
    SparsePoly operator*(const SparsePoly& rhs) const;

    bool operator==(const SparsePoly& rhs) const {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }

    // Canonical text form: terms sorted by exponent vector, each as
    // "coeff * z1^e1*z2^e2", omitting unit exponents, and omitting a unit
    // coefficient when at least one variable factor remains.
    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Exp, Int> terms_;
};

// Sum of all monomials of total degree deg in the variables z_lo..z_hi
// (1-based, inclusive), inside a polynomial ring with nvars variables.
// An empty range (lo > hi) gives 1 for deg = 0 and 0 otherwise.
SparsePoly complete_homogeneous(std::size_t nvars, unsigned deg, std::size_t lo, std::size_t hi);

// Exact determinant of a square grid of polynomials (Laplace expansion with
// memoization over column subsets). Throws std::invalid_argument if the grid
// is not square or the variable counts disagree.
SparsePoly det_poly(const std::vector<std::vector<SparsePoly>>& m);

// The mixed first partial derivative d/dz_1 ... d/dz_n evaluated with every
// variable set to 1: sum over terms of coeff * prod_j e_j.
Int derivative_sum_at_one(const SparsePoly& p);

}  // namespace cigrid
