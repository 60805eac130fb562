#include "cigrid/poly.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace cigrid {

SparsePoly SparsePoly::constant(std::size_t nvars, const Int& c) {
    SparsePoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(std::size_t nvars, const Exp& e, const Int& c) {
    if (e.size() != nvars) throw std::invalid_argument("monomial: exponent length mismatch");
    SparsePoly p(nvars);
    p.add_term(e, c);
    return p;
}

void SparsePoly::add_term(const Exp& e, const Int& c) {
    assert(e.size() == nvars_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int SparsePoly::coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("poly +: variable count mismatch");
    SparsePoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("poly -: variable count mismatch");
    SparsePoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, Int(-c));
    return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("poly *: variable count mismatch");
    SparsePoly out(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        if (!first_term) out += " + ";
        first_term = false;
        std::string factors;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "z" + std::to_string(i + 1);
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += factors;
        } else {
            out += c.get_str() + " * " + factors;
        }
    }
    return out;
}

SparsePoly complete_homogeneous(std::size_t nvars, unsigned deg, std::size_t lo, std::size_t hi) {
    if (lo < 1 || (hi > nvars)) throw std::invalid_argument("complete_homogeneous: bad variable range");
    SparsePoly out(nvars);
    if (lo > hi) {
        if (deg == 0) out.add_term(SparsePoly::Exp(nvars, 0), 1);
        return out;
    }
    SparsePoly::Exp e(nvars, 0);
    // distribute `remaining` degree over variables lo..hi, in order
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var == hi) {
            e[var - 1] = remaining;
            out.add_term(e, 1);
            e[var - 1] = 0;
            return;
        }
        for (unsigned take = 0; take <= remaining; ++take) {
            e[var - 1] = take;
            self(self, var + 1, remaining - take);
        }
        e[var - 1] = 0;
    };
    rec(rec, lo, deg);
    return out;
}

SparsePoly det_poly(const std::vector<std::vector<SparsePoly>>& m) {
    const std::size_t n = m.size();
    std::size_t nvars = 0;
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det_poly: matrix not square");
        for (const auto& p : row) {
            if (nvars == 0) nvars = p.nvars();
            if (p.nvars() != nvars) throw std::invalid_argument("det_poly: variable count mismatch");
        }
    }
    if (n == 0) return SparsePoly::constant(nvars == 0 ? 0 : nvars, 1);
    if (n > 31) throw std::invalid_argument("det_poly: matrix too large");

    // det of the submatrix on rows 1..popcount(mask) and the column set mask,
    // expanded along its last row, memoized per mask.
    std::unordered_map<std::uint32_t, SparsePoly> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> const SparsePoly& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int r = __builtin_popcount(mask);
        SparsePoly acc(nvars);
        int idx = 0;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++idx) {
            const int c = __builtin_ctz(bits);
            const SparsePoly& minor = self(self, mask & ~(std::uint32_t(1) << c));
            SparsePoly contrib = m[r - 1][c] * minor;
            if (((r - 1) + idx) % 2 == 0) {
                acc = acc + contrib;
            } else {
                acc = acc - contrib;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    memo.emplace(0u, SparsePoly::constant(nvars, 1));
    const std::uint32_t full = (n == 31) ? 0x7fffffffu : ((std::uint32_t(1) << n) - 1);
    return rec(rec, full);
}

Int derivative_sum_at_one(const SparsePoly& p) {
    Int total = 0;
    for (const auto& [e, c] : p.terms()) {
        Int prod = 1;
        for (unsigned exp : e) {
            if (exp == 0) { prod = 0; break; }
            prod *= exp;
        }
        if (prod != 0) total += c * prod;
    }
    return total;
}

}  // namespace cigrid
