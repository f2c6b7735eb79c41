#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minfill {

/// A labeled binary tree connecting the boundary {1..n}: leaves are exactly
/// the vertices 1..n, interior vertices n+1..2n-2 all have degree 3.
///
/// Canonical edge order: edge id i (1-based) for i <= n is the boundary edge
/// incident to leaf i; interior edges carry ids n+1..2n-3 in construction
/// order. edges[k] holds the endpoints of edge id k+1.
struct BinaryTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int num_vertices() const { return 2 * n - 2; }
    int num_edges() const { return 2 * n - 3; }
    bool is_leaf(int v) const { return v >= 1 && v <= n; }

    /// adjacency()[v] lists (neighbor, edge id) pairs; index 0 unused.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

/// A partition of the boundary {1..n} induced by removing one tree edge.
/// side1 is the side containing the smallest label; both sides are sorted.
struct Cut {
    std::vector<int> side1;
    std::vector<int> side2;
    int edge = 0;
};

/// Throws DomainError unless the structural invariants hold (connected,
/// acyclic, 2n-2 vertices, degree 1 exactly at leaves 1..n, degree 3 inside,
/// and the canonical edge order).
void validate_tree(const BinaryTree& tree);

/// All (2n-5)!! labeled binary trees on boundary {1..n}, built by inserting
/// leaf m+1 into every edge of every tree on m leaves; deterministic order.
std::vector<BinaryTree> enumerate_topologies(int n);

/// Unordered leaf pairs sharing a common neighbor; nonempty for n >= 3.
std::vector<std::pair<int, int>> moustaches(const BinaryTree& tree);

/// Boundary partition induced by removing the given edge (1-based id).
Cut edge_cut(const BinaryTree& tree, int edge_id);

/// Edge ids of the unique path between leaves i and j, ascending.
std::vector<int> path_edges(const BinaryTree& tree, int i, int j);

/// Same path as a bitmask over edge ids (bit k-1 set iff edge k on the path).
std::uint32_t path_edge_mask(const BinaryTree& tree, int i, int j);

/// Removes a moustache pair (two leaves and their edges) and promotes the
/// exposed interior vertex to the boundary; remaining original leaves are
/// relabeled 1..n-2 in order and the new boundary vertex becomes n-1.
BinaryTree eliminate_moustaches(const BinaryTree& tree, std::pair<int, int> pair);

/// The two-moustache chain: interior path v1..v(n-2), leaves 1,2 on v1,
/// leaf j+1 on vj for 1 < j < n-2, leaves n-1,n on v(n-2).
BinaryTree caterpillar_tree(int n);

/// The three-moustache type for n in {6,7}: moustaches {1,2},{3,4},{5,6}
/// around a central interior vertex (n=7 hangs leaf 7 between the center
/// and the {5,6} moustache).
BinaryTree snowflake_tree(int n);

/// Resolves CLI shape names ("caterpillar", "snowflake").
BinaryTree tree_by_shape(const std::string& shape, int n);

/// Parses a Newick-style string over integer leaf labels, e.g.
/// "((1,2),(3,4));". A degree-2 root is contracted; a trailing ';' optional.
BinaryTree parse_newick(const std::string& text);

/// Deterministic serialization; parse_newick(to_newick(t)) has the same
/// splits as t.
std::string to_newick(const BinaryTree& tree);

/// The set of boundary splits, one canonical bitmask per edge, sorted.
/// Two labeled trees are equal as topologies iff their split sets coincide.
std::vector<std::uint32_t> split_set(const BinaryTree& tree);

/// Shape invariant: sorted multiset of min(|side1|,|side2|) over all edges.
/// Distinguishes all unlabeled shapes for n <= 7.
std::vector<int> shape_key(const BinaryTree& tree);

}  // namespace minfill
