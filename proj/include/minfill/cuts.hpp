#pragma once

#include "minfill/rational.hpp"
#include "minfill/trees.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minfill {

/// Cut matrix of the complete graph on the boundary, for the cut family
/// induced by the edges of a binary tree. Rows follow the canonical edge
/// order, columns the lexicographic pair order; entry (k, (i,j)) is 1 iff
/// i and j lie on opposite sides of the cut of edge k, equivalently iff
/// edge k lies on the i-j path.
struct CutMatrix {
    int n = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;  // row-major

    std::uint8_t at(int r, int c) const {
        return a[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
    }
};

CutMatrix build_cut_matrix(const BinaryTree& tree);

/// Rank over the rationals via exact Gaussian elimination (partial pivoting
/// on numerator magnitude). Always 2n-3 for a cut matrix of a binary tree.
int rational_rank(const CutMatrix& m);
int rational_rank(const std::vector<std::vector<Rat>>& m);

/// Space-separated 0/1 rows under a header line of pair labels.
std::string render_cut_matrix(const CutMatrix& m);

}  // namespace minfill
