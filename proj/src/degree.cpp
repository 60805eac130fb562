#include "cigrid/degree.hpp"

#include <stdexcept>

namespace cigrid {

Int deg_determinantal(unsigned d, unsigned m, unsigned t) {
    if (t < 1 || t > std::min(d, m) + 1) {
        throw std::invalid_argument("deg_determinantal: requires 1 <= t <= min(d,m)+1");
    }
    if (t == 1) return 1;
    const unsigned n = t - 1;
    IntMatrix mat(n, n);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            mat.at(i - 1, j - 1) =
                binomial(d + m - i - j, static_cast<long>(d) - static_cast<long>(i));
        }
    }
    return det_int(mat);
}

Int alpha(unsigned d, unsigned l, unsigned t) {
    Int total = 0;
    for (unsigned u = t - 1; u + t <= l + 1; ++u) {
        total += binomial(l, u) * deg_determinantal(d, u, t) * deg_determinantal(d, l - u, t);
    }
    return total;
}

Int beta(unsigned d, unsigned l, unsigned t) {
    if (2 * t < l + 2) return 0;  // exponent would be negative; range is t <= l <= 2t-2
    const unsigned e = 2 * t - 2 - l;
    return binomial(l, t - 1) * binomial(t - 1, e) * int_pow(Int(d), e);
}

SparsePoly lgv_generating_function(unsigned d, unsigned l, unsigned t) {
    if (t < 2 || t > std::min(d, l) + 1) {
        throw std::invalid_argument("lgv_generating_function: requires 2 <= t <= min(d,l)+1");
    }
    const unsigned n = t - 1;
    std::vector<std::vector<SparsePoly>> h(n, std::vector<SparsePoly>(n, SparsePoly(l)));
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            h[i - 1][j - 1] = complete_homogeneous(l, d - i, j, l);
        }
    }
    SparsePoly det = det_poly(h);
    std::vector<unsigned> prefactor(l);
    for (unsigned j = 1; j <= l; ++j) prefactor[j - 1] = std::min(j, t - 1);
    return det * SparsePoly::monomial(l, prefactor, Int(1));
}

Int deg_V_empty(unsigned d, unsigned l, unsigned t) {
    return derivative_sum_at_one(lgv_generating_function(d, l, t));
}

Int deg_V_empty_closed_form(unsigned d, unsigned l) {
    if (l + 1 < d) throw std::invalid_argument("deg_V_empty_closed_form: requires l >= d-1");
    if (d < 1) throw std::invalid_argument("deg_V_empty_closed_form: requires d >= 1");
    return int_pow(Int(d), d - 1) * int_pow(Int(d) - 1, l - d + 1) * binomial(l, d - 1);
}

DegreeReport deg_V_Delta(unsigned d, unsigned l, unsigned t) {
    if (t < 2 || t > d || t > l) {
        throw std::invalid_argument("deg_V_Delta: requires 2 <= t <= min(d,l)");
    }
    DegreeReport rep;
    rep.d = d;
    rep.l = l;
    rep.t = t;
    rep.deg_V_empty = deg_V_empty(d, l, t);
    rep.methods.push_back("lgv");
    const long lhs_long = static_cast<long>(l);
    Int total = 0;
    std::string label;
    if (l > 2 * t - 2) {
        rep.alpha = alpha(d, l, t);
        const long lever = static_cast<long>(t - 1) * (static_cast<long>(d) - t + 1);
        if (lever >= lhs_long) {
            total += *rep.alpha;
            label = "alpha";
        }
        if (lever <= lhs_long) {
            total += rep.deg_V_empty;
            label = label.empty() ? "V_empty" : label + "+V_empty";
        }
    } else {
        rep.beta = beta(d, l, t);
        const long lever = (static_cast<long>(d) - t) * (static_cast<long>(l) - t) +
                           static_cast<long>(d) - 1;
        if (lever >= lhs_long) {
            total += *rep.beta;
            label = "beta";
        }
        if (lever <= lhs_long) {
            total += rep.deg_V_empty;
            label = label.empty() ? "V_empty" : label + "+V_empty";
        }
    }
    rep.deg_V_Delta = total;
    rep.case_label = label;
    return rep;
}

}  // namespace cigrid
