#pragma once

#include "minfill/rational.hpp"
#include "minfill/trees.hpp"

#include <string>
#include <utility>
#include <vector>

namespace minfill {
namespace golden {

/// Reference data for one tree type: the known cut matrix, the complete
/// vertex list of its dual polyhedron (as common denominator + scaled
/// integer coordinates, in the reference order), and the matching
/// multi-perimeter expressions.
struct Polytope {
    int n = 0;
    BinaryTree tree;
    std::vector<std::vector<int>> matrix;
    std::vector<std::pair<long, std::vector<long>>> vertices;
    std::vector<std::string> formulas_text;
};

const Polytope& caterpillar4();
const Polytope& caterpillar5();
const Polytope& caterpillar6();
const Polytope& snowflake6();

/// Exact coordinates of the reference vertices, in reference order.
std::vector<std::vector<Rat>> vertex_coords(const Polytope& p);

/// LaTeX renderings of the two four-point expressions.
std::vector<std::string> formulas4_latex();

/// Pairs (index into caterpillar6 list, index into snowflake6 list), 0-based,
/// of vertices the two n=6 polyhedra share.
std::vector<std::pair<int, int>> shared_vertex_pairs6();

}  // namespace golden
}  // namespace minfill
