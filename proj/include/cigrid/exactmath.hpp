#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace cigrid {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not reduce; this does, and moves the sign into
// the numerator.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" with optional sign.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// C(n, k); 0 when k < 0 or k > n.
Int binomial(unsigned long n, long k);

Int int_pow(const Int& base, unsigned long exp);

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Takes a copy;
// the elimination is destructive. Throws std::invalid_argument if non-square.
Int det_int(IntMatrix m);

// Exact rank over Q by Gaussian elimination. Empty matrix has rank 0.
std::size_t rank_rational(RatMatrix m);

}  // namespace cigrid
