#include "cigrid/exactmath.hpp"

#include <cassert>
#include <stdexcept>

namespace cigrid {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// mpz_class rejects a leading '+', which the grammar here allows.
Int parse_int(std::string part) {
    if (!part.empty() && part.front() == '+') part.erase(part.begin());
    return Int(part);
}

}  // namespace

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return make_rat(parse_int(s), 1);
    }
    Int num(parse_int(s.substr(0, slash)));
    Int den(parse_int(s.substr(slash + 1)));
    return make_rat(num, den);
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

Int det_int(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_int: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss guarantees exact divisibility by the previous pivot.
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

std::size_t rank_rational(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat factor = m.at(i, col) / m.at(rank, col);
            m.at(i, col) = 0;
            for (std::size_t j = col + 1; j < cols; ++j) {
                m.at(i, j) -= factor * m.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace cigrid
