#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cigrid/exactmath.hpp"
#include "cigrid/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace cigrid;

namespace {

std::vector<unsigned> to_vertices(unsigned ncols, const std::vector<GridCell>& cells) {
    std::vector<unsigned> out;
    for (const GridCell& c : cells) out.push_back(cell_to_vertex(ncols, c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("cell/vertex numbering is row-major") {
    CHECK(cell_to_vertex(4, GridCell{1, 1}) == 1);
    CHECK(cell_to_vertex(4, GridCell{2, 3}) == 7);
    for (unsigned v = 1; v <= 12; ++v) {
        CHECK(cell_to_vertex(4, vertex_to_cell(4, v)) == v);
    }
}

TEST_CASE("diagonal hypergraph sizes") {
    CHECK(hypergraph_A(3, 3, 2).edges.size() == 9);   // C(3,2)^2
    CHECK(hypergraph_A(4, 5, 3).edges.size() == 40);  // C(4,3)*C(5,3)
    Hypergraph a22 = hypergraph_A(2, 2, 2);
    CHECK(a22.vertex_count == 4);
    REQUIRE(a22.edges.size() == 1);
    CHECK(a22.edges[0] == std::vector<unsigned>{1, 4});  // the increasing diagonal

    // every edge of A_t is a strictly increasing diagonal of length t
    for (const auto& e : hypergraph_A(4, 4, 3).edges) {
        REQUIRE(e.size() == 3);
        GridCell prev = vertex_to_cell(4, e[0]);
        for (std::size_t i = 1; i < e.size(); ++i) {
            GridCell cur = vertex_to_cell(4, e[i]);
            CHECK(cur.row > prev.row);
            CHECK(cur.col > prev.col);
            prev = cur;
        }
    }
}

TEST_CASE("doubled-grid hypergraph sizes") {
    // B_t: C(d,t)*C(l,t)*2^t diagonals; C_t: one pair per column pair and i < i'
    CHECK(hypergraph_B_diagonals(2, 2, 2).edges.size() == 4);
    CHECK(hypergraph_C_pairs(2, 2).edges.size() == 2);
    CHECK(hypergraph_B(2, 2, 2).edges.size() == 6);
    CHECK(hypergraph_B(2, 2, 2).vertex_count == 8);

    CHECK(hypergraph_B_diagonals(3, 3, 2).edges.size() == 36);  // 3*3*4
    CHECK(hypergraph_C_pairs(3, 3).edges.size() == 9);          // 3 pairs * C(3,2)

    // every B_t diagonal uses at most one column from each pair {2j-1, 2j}
    for (const auto& e : hypergraph_B_diagonals(3, 3, 2).edges) {
        std::set<unsigned> pairs;
        for (unsigned v : e) {
            unsigned col = vertex_to_cell(6, v).col;
            CHECK(pairs.insert((col + 1) / 2).second);
        }
    }
}

TEST_CASE("transversal tests and minimal transversals") {
    Hypergraph h;
    h.vertex_count = 3;
    h.edges = {{1, 2}, {2, 3}};
    CHECK(is_transversal(h, {2}));
    CHECK(is_transversal(h, {1, 3}));
    CHECK_FALSE(is_transversal(h, {1}));
    CHECK_FALSE(is_transversal(h, {}));

    auto mins = minimal_transversals(h);
    REQUIRE(mins.size() == 2);
    CHECK(mins[0] == std::vector<unsigned>{1, 3});
    CHECK(mins[1] == std::vector<unsigned>{2});

    Hypergraph empty_edge;
    empty_edge.vertex_count = 2;
    empty_edge.edges = {{}};
    CHECK_THROWS_AS(minimal_transversals(empty_edge), std::invalid_argument);

    // no edges: the empty set is the unique minimal transversal
    Hypergraph no_edges;
    no_edges.vertex_count = 2;
    auto trivial = minimal_transversals(no_edges);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].empty());
}

TEST_CASE("minimal transversals of the 2x2 diagonal hypergraph") {
    auto mins = minimal_transversals(hypergraph_A(2, 2, 2));
    REQUIRE(mins.size() == 2);
    CHECK(mins[0] == std::vector<unsigned>{1});
    CHECK(mins[1] == std::vector<unsigned>{4});
}

TEST_CASE("path families on the 2x2 grid") {
    auto fams = enumerate_path_families(2, 2, 2);
    REQUIRE(fams.size() == 2);
    Int total = 0;
    std::vector<std::vector<GridCell>> complements;
    for (const auto& f : fams) {
        REQUIRE(f.paths.size() == 1);
        CHECK(f.paths[0].cells.front() == GridCell{1, 2});
        CHECK(f.paths[0].cells.back() == GridCell{2, 1});
        CHECK(family_weight(f) == 2);
        total += family_weight(f);
        complements.push_back(complement_of_family(f));
    }
    CHECK(total == 4);
    std::sort(complements.begin(), complements.end());
    CHECK(complements[0] == std::vector<GridCell>{GridCell{1, 1}});
    CHECK(complements[1] == std::vector<GridCell>{GridCell{2, 2}});
}

TEST_CASE("path families on the 3x3 grid") {
    auto fams = enumerate_path_families(3, 3, 3);
    REQUIRE(fams.size() == 3);
    Int total = 0;
    for (const auto& f : fams) {
        REQUIRE(f.paths.size() == 2);
        CHECK(family_weight(f) == 18);
        total += family_weight(f);
        // the two paths are pairwise disjoint
        std::set<std::pair<unsigned, unsigned>> used;
        for (const auto& p : f.paths)
            for (const GridCell& c : p.cells)
                CHECK(used.insert({c.row, c.col}).second);
    }
    CHECK(total == 54);
}

TEST_CASE("path complements are the minimal diagonal transversals") {
    for (auto [d, l, t] : std::vector<std::array<unsigned, 3>>{
             {2, 2, 2}, {3, 3, 2}, {3, 3, 3}, {4, 3, 3}, {3, 4, 3}}) {
        auto fams = enumerate_path_families(d, l, t);
        std::set<std::vector<unsigned>> complements;
        for (const auto& f : fams) {
            complements.insert(to_vertices(l, complement_of_family(f)));
        }
        auto mins = minimal_transversals(hypergraph_A(d, l, t));
        std::set<std::vector<unsigned>> min_set(mins.begin(), mins.end());
        CHECK(complements == min_set);
        CHECK(fams.size() == mins.size());
    }
}

TEST_CASE("pi projects doubled-grid subsets onto full column pairs") {
    std::vector<GridCell> A{GridCell{1, 1}, GridCell{1, 2}, GridCell{2, 3}};
    auto img = pi_map(A);
    REQUIRE(img.size() == 1);
    CHECK(img[0] == GridCell{1, 1});

    CHECK(pi_map({}).empty());
    std::vector<GridCell> B{GridCell{2, 3}, GridCell{2, 4}, GridCell{1, 1}};
    auto img2 = pi_map(B);
    REQUIRE(img2.size() == 1);
    CHECK(img2[0] == GridCell{2, 2});
}

TEST_CASE("multiplicity counts free cells per column") {
    CHECK(multiplicity_m(2, 2, {GridCell{1, 1}}) == 2);       // (2-1)*(2-0)
    CHECK(multiplicity_m(3, 2, {GridCell{1, 1}, GridCell{2, 1}}) == 3);  // 1*3
    CHECK(multiplicity_m(2, 2, {}) == 4);

    // sum of m over the minimal transversals of A_2 on the 2x2 grid
    Int sum = 0;
    for (const auto& tr : minimal_transversals(hypergraph_A(2, 2, 2))) {
        std::vector<GridCell> cells;
        for (unsigned v : tr) cells.push_back(vertex_to_cell(2, v));
        sum += multiplicity_m(2, 2, cells);
    }
    CHECK(sum == 4);
}

TEST_CASE("transversals of the doubled diagonals match under pi") {
    // random subsets A of the d x 2l grid: A is a transversal of the
    // doubled diagonal family exactly when pi(A) is a transversal of A_t
    std::mt19937 rng(12345);
    for (auto [d, l, t] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 3, 2}}) {
        Hypergraph big = hypergraph_B_diagonals(d, l, t);
        Hypergraph small = hypergraph_A(d, l, t);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<GridCell> A;
            std::vector<unsigned> vertices;
            for (unsigned i = 1; i <= d; ++i) {
                for (unsigned j = 1; j <= 2 * l; ++j) {
                    if (rng() % 2) {
                        A.push_back(GridCell{i, j});
                        vertices.push_back(cell_to_vertex(2 * l, GridCell{i, j}));
                    }
                }
            }
            bool lhs = is_transversal(big, vertices);
            bool rhs = is_transversal(small, to_vertices(l, pi_map(A)));
            CHECK(lhs == rhs);
        }
    }
}
