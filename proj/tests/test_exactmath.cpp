#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cigrid/exactmath.hpp"
#include "cigrid/poly.hpp"

#include <stdexcept>

using namespace cigrid;

TEST_CASE("make_rat reduces and normalizes the sign into the numerator") {
    CHECK(make_rat(2, 4) == Rat(1, 2));
    CHECK(make_rat(-2, 4) == make_rat(1, -2));
    CHECK(make_rat(1, -2).get_num() == -1);
    CHECK(make_rat(1, -2).get_den() == 2);
    CHECK(make_rat(0, 7) == 0);
    CHECK(make_rat(-6, -4) == Rat(3, 2));
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat and rat_to_string round-trip") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("-7") == -7);
    CHECK(parse_rat("+2/6") == make_rat(1, 3));
    CHECK(parse_rat("2/-6") == make_rat(-1, 3));
    CHECK(rat_to_string(make_rat(3, 4)) == "3/4");
    CHECK(rat_to_string(make_rat(-10, 5)) == "-2");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(parse_rat(rat_to_string(make_rat(-35, 21))) == make_rat(-5, 3));
    CHECK_THROWS(parse_rat("x"));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
}

TEST_CASE("binomial handles the boundary cases") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 6) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("int_pow") {
    CHECK(int_pow(3, 4) == 81);
    CHECK(int_pow(5, 0) == 1);
    CHECK(int_pow(-2, 3) == -8);
    CHECK(int_pow(10, 20) == Int("100000000000000000000"));
}

TEST_CASE("det_int computes exact determinants") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 3; m.at(1, 1) = 4;
    CHECK(det_int(m) == -2);

    IntMatrix s(2, 2);
    s.at(0, 0) = 1; s.at(0, 1) = 2;
    s.at(1, 0) = 2; s.at(1, 1) = 4;
    CHECK(det_int(s) == 0);

    // needs a row swap: zero pivot in the top-left corner
    IntMatrix w(2, 2);
    w.at(0, 0) = 0; w.at(0, 1) = 1;
    w.at(1, 0) = 1; w.at(1, 1) = 0;
    CHECK(det_int(w) == -1);

    IntMatrix e(0, 0);
    CHECK(det_int(e) == 1);

    IntMatrix r(2, 3);
    CHECK_THROWS_AS(det_int(r), std::invalid_argument);

    // Vandermonde on 2, 3, 5: prod of differences = 1*3*2 = 6
    IntMatrix v(3, 3);
    long pts[3] = {2, 3, 5};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.at(i, j) = int_pow(pts[i], j);
    CHECK(det_int(v) == 6);
}

TEST_CASE("rank_rational") {
    RatMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 2; m.at(1, 1) = 4;
    CHECK(rank_rational(m) == 1);

    RatMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(rank_rational(id) == 3);

    RatMatrix z(2, 3);
    CHECK(rank_rational(z) == 0);

    RatMatrix e(0, 0);
    CHECK(rank_rational(e) == 0);

    RatMatrix f(3, 2);
    f.at(0, 0) = make_rat(1, 2); f.at(0, 1) = make_rat(1, 3);
    f.at(1, 0) = make_rat(1, 4); f.at(1, 1) = make_rat(1, 6);  // row0 / 2
    f.at(2, 0) = 0;              f.at(2, 1) = 1;
    CHECK(rank_rational(f) == 2);
}

TEST_CASE("SparsePoly arithmetic") {
    SparsePoly x = SparsePoly::monomial(2, {1, 0}, 1);
    SparsePoly y = SparsePoly::monomial(2, {0, 1}, 1);
    SparsePoly sq = (x + y) * (x + y);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({0, 2}) == 1);
    CHECK(sq.coefficient({1, 0}) == 0);

    SparsePoly z = sq - sq;
    CHECK(z.is_zero());

    SparsePoly c = SparsePoly::constant(2, -3);
    CHECK((c * sq).coefficient({1, 1}) == -6);
    // map order is lexicographic on the exponent vector: (0,2) < (1,1) < (2,0)
    CHECK(sq.to_string() == "z2^2 + 2 * z1*z2 + z1^2");
}

TEST_CASE("complete_homogeneous") {
    SparsePoly h = complete_homogeneous(2, 2, 1, 2);
    CHECK(h.term_count() == 3);
    CHECK(h.coefficient({2, 0}) == 1);
    CHECK(h.coefficient({1, 1}) == 1);
    CHECK(h.coefficient({0, 2}) == 1);

    // restricted variable window inside a larger ring
    SparsePoly g = complete_homogeneous(3, 1, 2, 3);
    CHECK(g.term_count() == 2);
    CHECK(g.coefficient({0, 1, 0}) == 1);
    CHECK(g.coefficient({0, 0, 1}) == 1);

    // empty range: 1 for degree 0, 0 otherwise
    CHECK(complete_homogeneous(2, 0, 2, 1).coefficient({0, 0}) == 1);
    CHECK(complete_homogeneous(2, 3, 2, 1).is_zero());
    CHECK(complete_homogeneous(2, 0, 1, 2).coefficient({0, 0}) == 1);
}

TEST_CASE("det_poly") {
    SparsePoly x = SparsePoly::monomial(2, {1, 0}, 1);
    SparsePoly y = SparsePoly::monomial(2, {0, 1}, 1);
    SparsePoly one = SparsePoly::constant(2, 1);
    SparsePoly d = det_poly({{x, y}, {one, one}});
    CHECK(d == x - y);

    CHECK_THROWS_AS(det_poly({{x, y}}), std::invalid_argument);

    // 3x3 with a polynomial entry: det [[x,0,0],[0,y,0],[0,0,x+y]]
    SparsePoly zero = SparsePoly::constant(2, 0);
    SparsePoly d3 = det_poly({{x, zero, zero}, {zero, y, zero}, {zero, zero, x + y}});
    CHECK(d3.coefficient({2, 1}) == 1);
    CHECK(d3.coefficient({1, 2}) == 1);
    CHECK(d3.term_count() == 2);
}

TEST_CASE("derivative_sum_at_one multiplies each term by its exponent product") {
    // p = 3*z1^2*z2  ->  3 * 2 * 1 = 6
    SparsePoly p = SparsePoly::monomial(2, {2, 1}, 3);
    CHECK(derivative_sum_at_one(p) == 6);
    // a term missing a variable contributes 0
    SparsePoly q = SparsePoly::monomial(2, {2, 0}, 5);
    CHECK(derivative_sum_at_one(q) == 0);
    CHECK(derivative_sum_at_one(p + q) == 6);
    CHECK(derivative_sum_at_one(SparsePoly(2)) == 0);
}
