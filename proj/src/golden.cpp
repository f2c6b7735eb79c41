#include "minfill/golden.hpp"

namespace minfill {
namespace golden {

namespace {

Polytope make_caterpillar4() {
    Polytope p;
    p.n = 4;
    p.tree = caterpillar_tree(4);
    p.matrix = {
        {1, 1, 1, 0, 0, 0},
        {1, 0, 0, 1, 1, 0},
        {0, 1, 0, 1, 0, 1},
        {0, 0, 1, 0, 1, 1},
        {0, 1, 1, 1, 1, 0},
    };
    p.vertices = {
        {2, {1, 0, 1, 1, 0, 1}},
        {2, {1, 1, 0, 0, 1, 1}},
    };
    p.formulas_text = {
        "1/2 (d12 + d14 + d23 + d34)",
        "1/2 (d12 + d13 + d24 + d34)",
    };
    return p;
}

Polytope make_caterpillar5() {
    Polytope p;
    p.n = 5;
    p.tree = caterpillar_tree(5);
    p.matrix = {
        {1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
        {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
        {0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
        {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
        {0, 1, 1, 1, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 1, 0, 1, 1, 1, 1, 0},
    };
    p.vertices = {
        {2, {1, 0, 0, 1, 1, 0, 0, 1, 0, 1}},
        {2, {1, 1, 0, 0, 0, 0, 1, 1, 0, 1}},
        {2, {1, 0, 1, 0, 1, 0, 0, 0, 1, 1}},
        {2, {1, 1, 0, 0, 0, 1, 0, 0, 1, 1}},
    };
    p.formulas_text = {
        "1/2 (d12 + d15 + d23 + d34 + d45)",
        "1/2 (d12 + d13 + d25 + d34 + d45)",
        "1/2 (d12 + d14 + d23 + d35 + d45)",
        "1/2 (d12 + d13 + d24 + d35 + d45)",
    };
    return p;
}

Polytope make_caterpillar6() {
    Polytope p;
    p.n = 6;
    p.tree = caterpillar_tree(6);
    p.matrix = {
        {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
        {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
        {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
        {0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0},
    };
    p.vertices = {
        {2, {1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1}},
        {2, {1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1}},
        {2, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1}},
        {2, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1}},
        {2, {1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1}},
        {2, {1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1}},
        {2, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1}},
        {2, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1}},
    };
    p.formulas_text = {
        "1/2 (d12 + d16 + d23 + d34 + d45 + d56)",
        "1/2 (d12 + d13 + d26 + d34 + d45 + d56)",
        "1/2 (d12 + d14 + d23 + d36 + d45 + d56)",
        "1/2 (d12 + d13 + d24 + d36 + d45 + d56)",
        "1/2 (d12 + d15 + d23 + d34 + d46 + d56)",
        "1/2 (d12 + d13 + d25 + d34 + d46 + d56)",
        "1/2 (d12 + d14 + d23 + d35 + d46 + d56)",
        "1/2 (d12 + d13 + d24 + d35 + d46 + d56)",
    };
    return p;
}

Polytope make_snowflake6() {
    Polytope p;
    p.n = 6;
    p.tree = snowflake_tree(6);
    p.matrix = {
        {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
        {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
        {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
        {0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0},
        {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0},
    };
    // The 10th expression is printed with a d45 term in the source listing,
    // inconsistent with the 10th vertex (support at (4,6)); the vertex list
    // satisfies all nine cut equations, so d46 is stored here.
    p.vertices = {
        {2, {1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1}},
        {2, {1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1}},
        {2, {1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1}},
        {2, {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
        {4, {2, 1, 0, 0, 1, 0, 1, 1, 0, 2, 0, 1, 1, 0, 2}},
        {4, {2, 0, 1, 1, 0, 1, 0, 0, 1, 2, 0, 1, 1, 0, 2}},
        {2, {1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1}},
        {2, {1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1}},
        {4, {2, 0, 1, 0, 1, 1, 0, 1, 0, 2, 1, 0, 0, 1, 2}},
        {4, {2, 1, 0, 1, 0, 0, 1, 0, 1, 2, 1, 0, 0, 1, 2}},
        {2, {1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1}},
        {2, {1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1}},
    };
    p.formulas_text = {
        "1/2 (d12 + d16 + d24 + d34 + d35 + d56)",
        "1/2 (d12 + d14 + d26 + d34 + d35 + d56)",
        "1/2 (d12 + d15 + d24 + d34 + d36 + d56)",
        "1/2 (d12 + d14 + d25 + d34 + d36 + d56)",
        "1/4 (2 d12 + d13 + d16 + d24 + d25 + 2 d34 + d36 + d45 + 2 d56)",
        "1/4 (2 d12 + d14 + d15 + d23 + d26 + 2 d34 + d36 + d45 + 2 d56)",
        "1/2 (d12 + d16 + d23 + d34 + d45 + d56)",
        "1/2 (d12 + d13 + d26 + d34 + d45 + d56)",
        "1/4 (2 d12 + d14 + d16 + d23 + d25 + 2 d34 + d35 + d46 + 2 d56)",
        "1/4 (2 d12 + d13 + d15 + d24 + d26 + 2 d34 + d35 + d46 + 2 d56)",
        "1/2 (d12 + d15 + d23 + d34 + d46 + d56)",
        "1/2 (d12 + d13 + d25 + d34 + d46 + d56)",
    };
    return p;
}

}  // namespace

const Polytope& caterpillar4() {
    static const Polytope p = make_caterpillar4();
    return p;
}
const Polytope& caterpillar5() {
    static const Polytope p = make_caterpillar5();
    return p;
}
const Polytope& caterpillar6() {
    static const Polytope p = make_caterpillar6();
    return p;
}
const Polytope& snowflake6() {
    static const Polytope p = make_snowflake6();
    return p;
}

std::vector<std::vector<Rat>> vertex_coords(const Polytope& p) {
    std::vector<std::vector<Rat>> out;
    out.reserve(p.vertices.size());
    for (const auto& [denom, scaled] : p.vertices) {
        std::vector<Rat> coords;
        coords.reserve(scaled.size());
        for (long s : scaled) coords.push_back(Rat(s) / denom);
        out.push_back(std::move(coords));
    }
    return out;
}

std::vector<std::string> formulas4_latex() {
    return {
        "\\frac{1}{2}\\bigl(d_{12}+d_{14}+d_{23}+d_{34}\\bigr)",
        "\\frac{1}{2}\\bigl(d_{12}+d_{13}+d_{24}+d_{34}\\bigr)",
    };
}

std::vector<std::pair<int, int>> shared_vertex_pairs6() {
    return {{0, 6}, {1, 7}, {4, 10}, {5, 11}};
}

}  // namespace golden
}  // namespace minfill
