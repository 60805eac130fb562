#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cigrid/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

using namespace cigrid;

namespace {

GridShape shape(unsigned k, unsigned l, unsigned t, unsigned d, unsigned s = 2) {
    GridShape g;
    g.k = k; g.l = l; g.t = t; g.d = d; g.s = s;
    return g;
}

std::multiset<unsigned long> dim_multiset(const DecompositionReport& r) {
    std::multiset<unsigned long> out;
    for (const auto& c : r.components) out.insert(c.dim);
    return out;
}

}  // namespace

TEST_CASE("t = l decomposition: 3 x 6 grid") {
    GridShape g = shape(3, 6, 6, 4);
    DecompositionReport r = decompose(g);
    // one unconstrained component plus l^k - l one-zero-per-row subsets
    CHECK(r.components.size() == 211);
    CHECK(r.dim_V_Delta == 37);
    CHECK(r.components.front().kind == ComponentKind::Empty);
    CHECK(r.components.front().dim == 37);
    for (std::size_t i = 1; i < r.components.size(); ++i) {
        CHECK(r.components[i].kind == ComponentKind::TEqL);
        CHECK(r.components[i].dim == 33);
        CHECK(r.components[i].S.cells.size() == 3);
    }
    // the S subsets are distinct
    std::set<std::vector<unsigned>> seen;
    for (std::size_t i = 1; i < r.components.size(); ++i)
        CHECK(seen.insert(r.components[i].S.cells).second);
    // top component is the unconstrained one only
    CHECK(r.top_component_indices == std::vector<std::size_t>{0});
}

TEST_CASE("t = l dimension formulas") {
    GridShape g = shape(3, 6, 6, 4);
    CHECK(dim_V_empty(g) == 37);                       // l(k+d) - d - 1
    SubsetS S = make_subset(g, {1, 5, 9});             // one cell per row
    CHECK(dim_V_S_teql(g, S) == 33);                   // l(k+d-1) - k

    GridShape g2 = shape(2, 4, 4, 7);
    DecompositionReport r = decompose_t_eq_l(g2);
    CHECK(r.components.size() == 1 + 16 - 4);
    CHECK(dim_V_empty(g2) == 4 * 9 - 8);               // 28
    // d > l + k - 1, so the S-indexed components (dim l(k+d-1) - k = 30)
    // overtake the unconstrained one here
    CHECK(r.dim_V_Delta == 30);
    for (std::size_t i : r.top_component_indices)
        CHECK(r.components[i].kind == ComponentKind::TEqL);
}

TEST_CASE("k = 2 decomposition: t = 4, d = l = 5 census") {
    GridShape g = shape(2, 5, 4, 5);
    DecompositionReport r = decompose(g);
    CHECK(r.components.size() == 111);
    CHECK(r.dim_V_Delta == 26);

    // components by (u, v, j): counts follow the admissible-type table
    std::map<std::tuple<unsigned, unsigned, unsigned>, unsigned> census;
    unsigned empties = 0;
    for (const auto& c : r.components) {
        if (c.kind == ComponentKind::Empty) {
            ++empties;
            CHECK(c.dim == 26);
            continue;
        }
        REQUIRE(c.kind == ComponentKind::KTwo);
        ++census[{c.S.u, c.S.v, c.j}];
    }
    CHECK(empties == 1);
    CHECK(census.size() == 4);
    CHECK(census[{1, 1, 2}] == 20);
    CHECK(census[{1, 2, 2}] == 30);
    CHECK(census[{2, 1, 2}] == 30);
    CHECK(census[{2, 2, 1}] == 30);

    // no duplicated (S, j) pair
    std::set<std::pair<std::vector<unsigned>, unsigned>> pairs;
    for (const auto& c : r.components) {
        if (c.kind == ComponentKind::KTwo)
            CHECK(pairs.insert({c.S.cells, c.j}).second);
    }

    // the tie at this shape: the unconstrained component and the whole
    // (2,2,1) family are top-dimensional
    CHECK(r.top_component_indices.size() == 31);
    for (std::size_t idx : r.top_component_indices)
        CHECK(r.components[idx].dim == 26);
}

TEST_CASE("stratum dimension formula and transfers") {
    GridShape g = shape(2, 10, 5, 6);
    SubsetS S = make_subset(g, {1, 3, 5, 16, 18, 20});
    CHECK(dim_F_S_j(g, S, 2) == 48);
    CHECK(dim_V_S_j(g, S, 2) == 52);  // + l - (u+v)
    CHECK(dim_transfer(48, 2, 10, 6) == 52);
    CHECK(dim_transfer(10, 3, 6, 3) == 10 + 12 - 3);
}

TEST_CASE("k = 2 dimension formula matches the component maximum") {
    GridShape g = shape(2, 10, 5, 6);
    CHECK(dim_V_Delta_formula(g) == 58);
    DecompositionReport r = decompose(g);
    CHECK(r.dim_V_Delta == 58);
    unsigned long best = 0;
    for (const auto& c : r.components) best = std::max(best, c.dim);
    CHECK(best == 58);
    // here the unconstrained component is the unique top one
    CHECK(dim_V_empty(g) == 58);

    for (unsigned t = 2; t <= 4; ++t) {
        for (unsigned l = t; l <= 6; ++l) {
            for (unsigned d = t; d <= 6; ++d) {
                GridShape h = shape(2, l, t, d);
                DecompositionReport rep = decompose_k2(h);
                unsigned long maxdim = 0;
                for (const auto& c : rep.components) maxdim = std::max(maxdim, c.dim);
                CHECK(rep.dim_V_Delta == maxdim);
                CHECK(rep.dim_V_Delta == dim_V_Delta_formula(h));
            }
        }
    }
}

TEST_CASE("both decomposition routes agree when k = 2 and t = l") {
    for (unsigned l = 2; l <= 4; ++l) {
        for (unsigned d = l; d <= l + 2; ++d) {
            GridShape g = shape(2, l, l, d);
            DecompositionReport a = decompose_k2(g);
            DecompositionReport b = decompose_t_eq_l(g);
            CHECK(a.components.size() == b.components.size());
            CHECK(a.dim_V_Delta == b.dim_V_Delta);
            CHECK(dim_multiset(a) == dim_multiset(b));
        }
    }
    // spot values for the smallest case
    GridShape g = shape(2, 3, 3, 3);
    DecompositionReport r = decompose(g);
    CHECK(r.components.size() == 7);
    CHECK(r.dim_V_Delta == 11);
}

TEST_CASE("top-dimensional family summary") {
    {
        GridShape g = shape(2, 5, 4, 5);
        TopComponents tc = top_dimensional_components(g);
        CHECK(tc.j0 == 1);
        CHECK(tc.include_V_empty);
        CHECK(tc.s_family_top);
        REQUIRE(tc.types.size() == 1);
        CHECK(tc.types[0] == std::pair<unsigned, unsigned>{2, 2});
    }
    {
        GridShape g = shape(2, 10, 5, 6);
        TopComponents tc = top_dimensional_components(g);
        CHECK(tc.include_V_empty);
        CHECK_FALSE(tc.s_family_top);
    }

    // exhaustive cross-check: the claimed top types really achieve the max
    for (auto [l, t, d] : std::vector<std::array<unsigned, 3>>{
             {4, 3, 3}, {4, 3, 4}, {5, 4, 4}, {5, 4, 6}, {6, 3, 5}}) {
        GridShape g = shape(2, l, t, d);
        TopComponents tc = top_dimensional_components(g);
        unsigned long best_s = 0;
        std::set<std::pair<unsigned, unsigned>> best_types;
        for (const SubsetS& S : enumerate_admissible(g)) {
            if (S.empty()) continue;
            for (unsigned j : maximal_js(g, S)) {
                unsigned long dim = dim_V_S_j(g, S, j);
                if (dim > best_s) {
                    best_s = dim;
                    best_types = {{S.u, S.v}};
                } else if (dim == best_s) {
                    best_types.insert({S.u, S.v});
                }
            }
        }
        if (tc.s_family_top) {
            std::set<std::pair<unsigned, unsigned>> claimed(tc.types.begin(),
                                                            tc.types.end());
            CHECK(claimed == best_types);
        }
        unsigned long expected =
            std::max(best_s, static_cast<unsigned long>(dim_V_empty(g)));
        CHECK(dim_V_Delta_formula(g) == expected);
        CHECK(tc.include_V_empty == (dim_V_empty(g) >= best_s));
        CHECK(tc.s_family_top == (best_s >= dim_V_empty(g)));
    }
}

TEST_CASE("decompose rejects unsupported shapes") {
    CHECK_THROWS_AS(decompose(shape(3, 5, 4, 4)), std::invalid_argument);
    CHECK_THROWS_AS(decompose(shape(2, 5, 4, 3)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_k2(shape(3, 6, 6, 4)), std::invalid_argument);
    CHECK_THROWS_AS(decompose_t_eq_l(shape(3, 5, 4, 4)), std::invalid_argument);
}
