#include "minfill/polytope.hpp"

#include "minfill/golden.hpp"
#include "minfill/metric.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace minfill;

namespace {

std::set<std::vector<Rat>> coord_set(const std::vector<DualVertex>& vs) {
    std::set<std::vector<Rat>> out;
    for (const DualVertex& v : vs) out.insert(v.coords);
    return out;
}

std::set<std::vector<Rat>> coord_set(const std::vector<std::vector<Rat>>& vs) {
    return {vs.begin(), vs.end()};
}

}  // namespace

TEST_CASE("four-point polyhedron has exactly the two reference vertices") {
    std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(caterpillar_tree(4)));
    CHECK(coord_set(vs) == coord_set(golden::vertex_coords(golden::caterpillar4())));
    for (const DualVertex& v : vs) CHECK(v.multiplicity == 1);
}

TEST_CASE("five-point polyhedron has exactly the four reference vertices") {
    std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(caterpillar_tree(5)));
    CHECK(coord_set(vs) == coord_set(golden::vertex_coords(golden::caterpillar5())));
    for (const DualVertex& v : vs) CHECK(v.multiplicity == 1);
}

TEST_CASE("every enumerated vertex satisfies C(G) lambda = 1 exactly") {
    for (const BinaryTree& tree :
         {caterpillar_tree(4), caterpillar_tree(5), caterpillar_tree(6), snowflake_tree(6)}) {
        CutMatrix cm = build_cut_matrix(tree);
        for (const DualVertex& v : enumerate_vertices(cm)) {
            for (const Rat& c : v.coords) CHECK(c >= 0);
            for (int r = 0; r < cm.rows; ++r) {
                Rat sum = 0;
                for (int c = 0; c < cm.cols; ++c)
                    if (cm.at(r, c)) sum += v.coords[static_cast<std::size_t>(c)];
                CHECK(sum == 1);
            }
        }
    }
}

TEST_CASE("basis certificates: independent columns, support inside the basis") {
    CutMatrix cm = build_cut_matrix(caterpillar_tree(5));
    for (const DualVertex& v : enumerate_vertices(cm)) {
        CHECK(static_cast<int>(v.basis.size()) == cm.rows);
        CHECK(oracle::det_cofactor(oracle::submatrix_columns(cm, v.basis)) != 0);
        for (int q = 0; q < cm.cols; ++q)
            if (v.coords[static_cast<std::size_t>(q)] != 0)
                CHECK(std::binary_search(v.basis.begin(), v.basis.end(), q));
    }
}

TEST_CASE("no vertex is a proper convex combination of two others") {
    for (const BinaryTree& tree : {caterpillar_tree(4), caterpillar_tree(5)}) {
        std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(tree));
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = 0; b < vs.size(); ++b)
                for (std::size_t c = b + 1; c < vs.size(); ++c) {
                    if (a == b || a == c) continue;
                    CHECK(!oracle::is_proper_convex_combination(vs[a].coords, vs[b].coords,
                                                                vs[c].coords));
                }
    }
}

TEST_CASE("vertex multiplicity is the least k with 2k*coords integral") {
    CHECK(vertex_multiplicity({Rat(1) / 2, Rat(0), Rat(1) / 2}) == 1);
    CHECK(vertex_multiplicity({Rat(1) / 4, Rat(1) / 2, Rat(0)}) == 2);
    CHECK(vertex_multiplicity({Rat(1), Rat(0), Rat(2)}) == 1);
    CHECK(vertex_multiplicity({Rat(1) / 3}) == 3);
    CHECK(vertex_multiplicity({Rat(1) / 6}) == 3);
    CHECK(vertex_multiplicity({Rat(0), Rat(0)}) == 1);
    // Zero padding never changes k.
    CHECK(vertex_multiplicity({Rat(1) / 4, Rat(0), Rat(0), Rat(0)}) == 2);
}

TEST_CASE("maximal basis determinants audited against the cofactor oracle") {
    // Single 3x3 system for the three-point star.
    CutMatrix star = build_cut_matrix(caterpillar_tree(3));
    CHECK(max_basis_determinant(star) == 2);
    Rat oracle_det = oracle::det_cofactor(oracle::submatrix_columns(star, {0, 1, 2}));
    CHECK(abs(oracle_det) == 2);

    // Four points: sweep all C(6,5) submatrices with the oracle.
    CutMatrix cat4 = build_cut_matrix(caterpillar_tree(4));
    Rat best = 0;
    for (int skip = 0; skip < 6; ++skip) {
        std::vector<int> columns;
        for (int c = 0; c < 6; ++c)
            if (c != skip) columns.push_back(c);
        Rat d = abs(oracle::det_cofactor(oracle::submatrix_columns(cat4, columns)));
        best = std::max(best, d);
    }
    CHECK(best == 4);
    CHECK(max_basis_determinant(cat4) == 4);
    CHECK(max_basis_determinant(cat4) <= 8);  // 2^(2n-5) at n=4
}

TEST_CASE("enumeration is deterministic for any worker count") {
    CutMatrix cm = build_cut_matrix(snowflake_tree(6));
    std::vector<DualVertex> base = enumerate_vertices(cm, 1);
    for (int jobs : {2, 3, 7}) {
        std::vector<DualVertex> other = enumerate_vertices(cm, jobs);
        REQUIRE(other.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(other[i].coords == base[i].coords);
            CHECK(other[i].basis == base[i].basis);
            CHECK(other[i].multiplicity == base[i].multiplicity);
        }
    }
}

TEST_CASE("rank-deficient input is rejected") {
    CutMatrix bad;
    bad.n = 3;
    bad.rows = 3;
    bad.cols = 3;
    bad.a = {1, 1, 0, 1, 1, 0, 0, 0, 1};  // two equal rows
    CHECK_THROWS_WITH_AS(enumerate_vertices(bad), doctest::Contains("rank"), DomainError);
}

TEST_CASE("vertex rendering uses the common denominator") {
    DualVertex v;
    v.coords = {Rat(1) / 2, Rat(0), Rat(1) / 2};
    CHECK(render_vertex(v) == "1/2: (1,0,1)");
    v.coords = {Rat(1) / 2, Rat(1) / 4};
    CHECK(render_vertex(v) == "1/4: (2,1)");
}
