#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigrid/exactmath.hpp"
#include "cigrid/poly.hpp"

namespace cigrid {

// Degree of the variety of d x m matrices of rank < t:
// det[ binomial(d+m-i-j, d-i) ] for i,j in [t-1].  t = 1 gives 1.
Int deg_determinantal(unsigned d, unsigned m, unsigned t);

// alpha = sum over u = t-1 .. l-t+1 of
//   binomial(l,u) * deg_determinantal(d,u,t) * deg_determinantal(d,l-u,t);
// 0 when the range is empty.
Int alpha(unsigned d, unsigned l, unsigned t);

// beta = binomial(l,t-1) * binomial(t-1, 2t-2-l) * d^(2t-2-l).
Int beta(unsigned d, unsigned l, unsigned t);

// G_{d,l,t} = (prod_j z_j^{min(j,t-1)}) * det( h_{d-i}(z_j..z_l) )_{i,j in [t-1]}
SparsePoly lgv_generating_function(unsigned d, unsigned l, unsigned t);

// The mixed first derivative of G at the all-ones point.
Int deg_V_empty(unsigned d, unsigned l, unsigned t);

// d^{d-1} (d-1)^{l-d+1} binomial(l, d-1); valid when t = d.
Int deg_V_empty_closed_form(unsigned d, unsigned l);

struct DegreeReport {
    unsigned d = 0, l = 0, t = 0;
    Int deg_V_empty;
    std::optional<Int> alpha;
    std::optional<Int> beta;
    Int deg_V_Delta;
    // which indicator(s) fired: "alpha", "V_empty", "alpha+V_empty",
    // "beta", "beta+V_empty"
    std::string case_label;
    std::vector<std::string> methods;
};

// The k = 2 degree casework; both indicator terms contribute at equality.
DegreeReport deg_V_Delta(unsigned d, unsigned l, unsigned t);

}  // namespace cigrid
