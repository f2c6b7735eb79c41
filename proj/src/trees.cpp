#include "minfill/trees.hpp"

#include "minfill/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace minfill {

std::vector<std::vector<std::pair<int, int>>> BinaryTree::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(num_vertices()) + 1);
    for (int k = 0; k < num_edges(); ++k) {
        auto [u, v] = edges[static_cast<std::size_t>(k)];
        adj[static_cast<std::size_t>(u)].emplace_back(v, k + 1);
        adj[static_cast<std::size_t>(v)].emplace_back(u, k + 1);
    }
    return adj;
}

void validate_tree(const BinaryTree& tree) {
    if (tree.n < 3) throw DomainError("binary tree needs n >= 3 boundary vertices");
    if (tree.edges.size() != static_cast<std::size_t>(tree.num_edges()))
        throw DomainError("binary tree on n=" + std::to_string(tree.n) + " must have 2n-3 edges");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : tree.edges) {
        if (u < 1 || v < 1 || u > tree.num_vertices() || v > tree.num_vertices() || u == v)
            throw DomainError("edge endpoints out of range");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw DomainError("duplicate edge");
    }
    auto adj = tree.adjacency();
    for (int v = 1; v <= tree.num_vertices(); ++v) {
        std::size_t deg = adj[static_cast<std::size_t>(v)].size();
        if (tree.is_leaf(v) && deg != 1)
            throw DomainError("boundary vertex " + std::to_string(v) + " must have degree 1");
        if (!tree.is_leaf(v) && deg != 3)
            throw DomainError("interior vertex " + std::to_string(v) + " must have degree 3");
    }
    // Connectivity; |V| = |E| + 1 then rules out cycles.
    std::vector<char> visited(static_cast<std::size_t>(tree.num_vertices()) + 1, 0);
    std::vector<int> stack{1};
    visited[1] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (auto [u, e] : adj[static_cast<std::size_t>(v)])
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    if (reached != tree.num_vertices()) throw DomainError("tree is disconnected");
    for (int i = 1; i <= tree.n; ++i) {
        auto [u, v] = tree.edges[static_cast<std::size_t>(i - 1)];
        if (u != i && v != i)
            throw DomainError("edge " + std::to_string(i) + " must be incident to leaf " +
                              std::to_string(i));
    }
}

namespace {

// Construction-time representation: leaves positive, interior vertices
// negative in creation order. Splitting an edge keeps the first half at the
// old vector position, so interior edges stay in creation order.
struct RawTree {
    std::vector<std::pair<int, int>> edges;
    int interior_count = 0;
};

BinaryTree normalize(const RawTree& raw, int n) {
    std::map<int, int> interior_ids;
    for (const auto& [u, v] : raw.edges) {
        if (u < 0 && !interior_ids.count(u))
            interior_ids[u] = n + 1 + static_cast<int>(interior_ids.size());
        if (v < 0 && !interior_ids.count(v))
            interior_ids[v] = n + 1 + static_cast<int>(interior_ids.size());
    }
    auto remap = [&](int v) { return v > 0 ? v : interior_ids.at(v); };

    BinaryTree tree;
    tree.n = n;
    tree.edges.resize(static_cast<std::size_t>(2 * n - 3));
    std::size_t interior_slot = static_cast<std::size_t>(n);
    for (const auto& [u, v] : raw.edges) {
        int a = remap(u), b = remap(v);
        if (a >= 1 && a <= n)
            tree.edges[static_cast<std::size_t>(a - 1)] = {a, b};
        else if (b >= 1 && b <= n)
            tree.edges[static_cast<std::size_t>(b - 1)] = {b, a};
        else
            tree.edges[interior_slot++] = {a, b};
    }
    return tree;
}

}  // namespace

std::vector<BinaryTree> enumerate_topologies(int n) {
    if (n < 3) throw DomainError("topology enumeration needs n >= 3");
    std::vector<RawTree> current;
    {
        RawTree star;
        star.edges = {{1, -1}, {2, -1}, {3, -1}};
        star.interior_count = 1;
        current.push_back(std::move(star));
    }
    for (int m = 3; m < n; ++m) {
        std::vector<RawTree> next;
        next.reserve(current.size() * static_cast<std::size_t>(2 * m - 3));
        for (const RawTree& base : current) {
            for (std::size_t split = 0; split < base.edges.size(); ++split) {
                RawTree t = base;
                int x = -(t.interior_count + 1);
                t.interior_count += 1;
                auto [a, b] = t.edges[split];
                t.edges[split] = {a, x};
                t.edges.emplace_back(x, b);
                t.edges.emplace_back(m + 1, x);
                next.push_back(std::move(t));
            }
        }
        current = std::move(next);
    }
    std::vector<BinaryTree> result;
    result.reserve(current.size());
    for (const RawTree& raw : current) result.push_back(normalize(raw, n));
    return result;
}

std::vector<std::pair<int, int>> moustaches(const BinaryTree& tree) {
    auto adj = tree.adjacency();
    std::vector<std::pair<int, int>> pairs;
    for (int v = tree.n + 1; v <= tree.num_vertices(); ++v) {
        std::vector<int> leaves;
        for (auto [u, e] : adj[static_cast<std::size_t>(v)])
            if (tree.is_leaf(u)) leaves.push_back(u);
        std::sort(leaves.begin(), leaves.end());
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j)
                pairs.emplace_back(leaves[i], leaves[j]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

Cut edge_cut(const BinaryTree& tree, int edge_id) {
    if (edge_id < 1 || edge_id > tree.num_edges())
        throw DomainError("unknown edge id " + std::to_string(edge_id));
    auto adj = tree.adjacency();
    auto [start, other] = tree.edges[static_cast<std::size_t>(edge_id - 1)];
    std::vector<char> visited(static_cast<std::size_t>(tree.num_vertices()) + 1, 0);
    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, e] : adj[static_cast<std::size_t>(v)]) {
            if (e == edge_id) continue;
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    Cut cut;
    cut.edge = edge_id;
    for (int leaf = 1; leaf <= tree.n; ++leaf)
        (visited[static_cast<std::size_t>(leaf)] ? cut.side1 : cut.side2).push_back(leaf);
    if (cut.side1.empty() || cut.side2.empty())
        throw DomainError("edge cut produced an empty side");  // impossible on a valid tree
    if (cut.side1.front() > cut.side2.front()) std::swap(cut.side1, cut.side2);
    return cut;
}

std::vector<int> path_edges(const BinaryTree& tree, int i, int j) {
    if (i == j) throw DomainError("path endpoints must differ");
    if (i < 1 || j < 1 || i > tree.n || j > tree.n)
        throw DomainError("path endpoints must be boundary vertices");
    auto adj = tree.adjacency();
    std::vector<int> parent_edge(static_cast<std::size_t>(tree.num_vertices()) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(tree.num_vertices()) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(tree.num_vertices()) + 1, 0);
    std::vector<int> stack{i};
    visited[static_cast<std::size_t>(i)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == j) break;
        for (auto [u, e] : adj[static_cast<std::size_t>(v)])
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = 1;
                parent[static_cast<std::size_t>(u)] = v;
                parent_edge[static_cast<std::size_t>(u)] = e;
                stack.push_back(u);
            }
    }
    std::vector<int> result;
    for (int v = j; v != i; v = parent[static_cast<std::size_t>(v)])
        result.push_back(parent_edge[static_cast<std::size_t>(v)]);
    std::sort(result.begin(), result.end());
    return result;
}

std::uint32_t path_edge_mask(const BinaryTree& tree, int i, int j) {
    std::uint32_t mask = 0;
    for (int e : path_edges(tree, i, j)) mask |= 1u << (e - 1);
    return mask;
}

BinaryTree eliminate_moustaches(const BinaryTree& tree, std::pair<int, int> pair) {
    if (tree.n < 4) throw DomainError("moustache elimination needs n >= 4");
    auto [a, b] = pair;
    auto all = moustaches(tree);
    std::pair<int, int> key{std::min(a, b), std::max(a, b)};
    if (std::find(all.begin(), all.end(), key) == all.end())
        throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) +
                          ") is not a moustache pair of the tree");
    auto adj = tree.adjacency();
    int exposed = adj[static_cast<std::size_t>(a)].front().first;

    // The tree.n-2 surviving leaves keep their relative order as 1..n-1;
    // the exposed vertex becomes the new leaf n.
    int n = tree.n - 1;
    std::map<int, int> relabel;
    int next = 1;
    for (int leaf = 1; leaf <= tree.n; ++leaf)
        if (leaf != a && leaf != b) relabel[leaf] = next++;
    relabel[exposed] = n;

    std::map<int, int> interior_ids;
    auto remap = [&](int v) -> int {
        if (auto it = relabel.find(v); it != relabel.end()) return it->second;
        if (!interior_ids.count(v)) interior_ids[v] = n + 1 + static_cast<int>(interior_ids.size());
        return interior_ids.at(v);
    };

    BinaryTree result;
    result.n = n;
    result.edges.resize(static_cast<std::size_t>(2 * n - 3));
    std::size_t interior_slot = static_cast<std::size_t>(n);
    for (int k = 1; k <= tree.num_edges(); ++k) {
        if (k == a || k == b) continue;  // the two moustache edges
        auto [u, v] = tree.edges[static_cast<std::size_t>(k - 1)];
        int x = remap(u), y = remap(v);
        if (x >= 1 && x <= n)
            result.edges[static_cast<std::size_t>(x - 1)] = {x, y};
        else if (y >= 1 && y <= n)
            result.edges[static_cast<std::size_t>(y - 1)] = {y, x};
        else
            result.edges[interior_slot++] = {x, y};
    }
    validate_tree(result);
    return result;
}

BinaryTree caterpillar_tree(int n) {
    if (n < 3) throw DomainError("caterpillar needs n >= 3");
    BinaryTree tree;
    tree.n = n;
    tree.edges.resize(static_cast<std::size_t>(2 * n - 3));
    auto interior = [&](int j) { return n + j; };  // v_j, j = 1..n-2
    if (n == 3) {
        tree.edges = {{1, interior(1)}, {2, interior(1)}, {3, interior(1)}};
        return tree;
    }
    tree.edges[0] = {1, interior(1)};
    tree.edges[1] = {2, interior(1)};
    for (int leaf = 3; leaf <= n - 2; ++leaf)
        tree.edges[static_cast<std::size_t>(leaf - 1)] = {leaf, interior(leaf - 1)};
    tree.edges[static_cast<std::size_t>(n - 2)] = {n - 1, interior(n - 2)};
    tree.edges[static_cast<std::size_t>(n - 1)] = {n, interior(n - 2)};
    for (int j = 1; j <= n - 3; ++j)
        tree.edges[static_cast<std::size_t>(n - 1 + j)] = {interior(j), interior(j + 1)};
    return tree;
}

BinaryTree snowflake_tree(int n) {
    BinaryTree tree;
    tree.n = n;
    if (n == 6) {
        int v1 = 7, v2 = 8, v3 = 9, c = 10;
        tree.edges = {{1, v1}, {2, v1}, {3, v2}, {4, v2}, {5, v3}, {6, v3},
                      {v1, c}, {v2, c}, {v3, c}};
    } else if (n == 7) {
        int v1 = 8, v2 = 9, v3 = 10, c = 11, m = 12;
        tree.edges = {{1, v1}, {2, v1}, {3, v2}, {4, v2}, {5, v3}, {6, v3}, {7, m},
                      {v1, c}, {v2, c}, {v3, m}, {c, m}};
    } else {
        throw DomainError("snowflake shape is defined for n in {6,7}");
    }
    return tree;
}

BinaryTree tree_by_shape(const std::string& shape, int n) {
    if (shape == "caterpillar") return caterpillar_tree(n);
    if (shape == "snowflake") return snowflake_tree(n);
    throw DomainError("unknown shape '" + shape + "' (expected caterpillar or snowflake)");
}

namespace {

struct NewickNode {
    int label = 0;  // > 0 for leaves
    std::vector<NewickNode> children;
};

struct NewickParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit NewickParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw DomainError(std::string("newick parse error: expected '") + c + "' at offset " +
                              std::to_string(pos));
        ++pos;
    }

    NewickNode parse_node() {
        NewickNode node;
        if (peek() == '(') {
            ++pos;
            node.children.push_back(parse_node());
            while (peek() == ',') {
                ++pos;
                node.children.push_back(parse_node());
            }
            expect(')');
            return node;
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw DomainError("newick parse error: expected a leaf label");
        node.label = std::stoi(text.substr(start, pos - start));
        return node;
    }

    NewickNode parse() {
        NewickNode root = parse_node();
        if (peek() == ';') ++pos;
        skip_ws();
        if (pos != text.size()) throw DomainError("newick parse error: trailing content");
        return root;
    }
};

}  // namespace

BinaryTree parse_newick(const std::string& text) {
    NewickParser parser(text);
    NewickNode root = parser.parse();

    // Collect leaf labels and count interior nodes.
    std::vector<int> labels;
    int interior_count = 0;
    auto scan = [&](auto&& self, const NewickNode& node) -> void {
        if (node.children.empty()) {
            if (node.label < 1) throw DomainError("leaf labels must be positive integers");
            labels.push_back(node.label);
            return;
        }
        ++interior_count;
        for (const auto& child : node.children) self(self, child);
    };
    scan(scan, root);

    int n = static_cast<int>(labels.size());
    std::sort(labels.begin(), labels.end());
    for (int i = 0; i < n; ++i)
        if (labels[static_cast<std::size_t>(i)] != i + 1)
            throw DomainError("newick leaves must be labeled 1..n exactly once");
    if (n < 3) throw DomainError("newick tree needs at least 3 leaves");

    bool contract_root = root.children.size() == 2;
    if (root.children.empty() || (root.children.size() != 2 && root.children.size() != 3))
        throw DomainError("newick root must have 2 or 3 subtrees");

    std::vector<std::pair<int, int>> raw_edges;
    int next_interior = n;  // interior ids assigned in DFS pre-order
    auto build = [&](auto&& self, const NewickNode& node) -> int {
        if (node.children.empty()) return node.label;
        if (node.children.size() != 2)
            throw DomainError("internal newick nodes must have exactly 2 subtrees");
        int id = ++next_interior;
        for (const auto& child : node.children) raw_edges.emplace_back(id, self(self, child));
        return id;
    };

    if (contract_root) {
        int a = build(build, root.children[0]);
        int b = build(build, root.children[1]);
        if (a <= n && b <= n) throw DomainError("newick tree degenerates to a single edge");
        raw_edges.emplace_back(a, b);
    } else {
        int id = ++next_interior;
        for (const auto& child : root.children) raw_edges.emplace_back(id, build(build, child));
    }

    BinaryTree tree;
    tree.n = n;
    tree.edges.resize(static_cast<std::size_t>(2 * n - 3));
    if (raw_edges.size() != tree.edges.size())
        throw DomainError("newick tree is not binary (wrong edge count)");
    std::size_t interior_slot = static_cast<std::size_t>(n);
    for (const auto& [u, v] : raw_edges) {
        if (u >= 1 && u <= n)
            tree.edges[static_cast<std::size_t>(u - 1)] = {u, v};
        else if (v >= 1 && v <= n)
            tree.edges[static_cast<std::size_t>(v - 1)] = {v, u};
        else
            tree.edges[interior_slot++] = {u, v};
    }
    validate_tree(tree);
    return tree;
}

namespace {

int min_leaf_below(const BinaryTree& tree,
                   const std::vector<std::vector<std::pair<int, int>>>& adj, int v, int from) {
    if (tree.is_leaf(v)) return v;
    int best = tree.n + 1;
    for (auto [u, e] : adj[static_cast<std::size_t>(v)])
        if (u != from) best = std::min(best, min_leaf_below(tree, adj, u, v));
    return best;
}

void write_subtree(const BinaryTree& tree,
                   const std::vector<std::vector<std::pair<int, int>>>& adj, int v, int from,
                   std::ostringstream& out) {
    if (tree.is_leaf(v)) {
        out << v;
        return;
    }
    std::vector<int> kids;
    for (auto [u, e] : adj[static_cast<std::size_t>(v)])
        if (u != from) kids.push_back(u);
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
        return min_leaf_below(tree, adj, x, v) < min_leaf_below(tree, adj, y, v);
    });
    out << '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) out << ',';
        write_subtree(tree, adj, kids[i], v, out);
    }
    out << ')';
}

}  // namespace

std::string to_newick(const BinaryTree& tree) {
    auto adj = tree.adjacency();
    int hub = adj[1].front().first;  // interior neighbor of leaf 1
    std::vector<int> rest;
    for (auto [u, e] : adj[static_cast<std::size_t>(hub)])
        if (u != 1) rest.push_back(u);
    std::sort(rest.begin(), rest.end(), [&](int x, int y) {
        return min_leaf_below(tree, adj, x, hub) < min_leaf_below(tree, adj, y, hub);
    });
    std::ostringstream out;
    out << "(1";
    for (int child : rest) {
        out << ',';
        write_subtree(tree, adj, child, hub, out);
    }
    out << ");";
    return out.str();
}

std::vector<std::uint32_t> split_set(const BinaryTree& tree) {
    std::vector<std::uint32_t> splits;
    splits.reserve(static_cast<std::size_t>(tree.num_edges()));
    for (int e = 1; e <= tree.num_edges(); ++e) {
        Cut cut = edge_cut(tree, e);
        std::uint32_t mask = 0;  // side away from leaf 1
        for (int leaf : cut.side2) mask |= 1u << (leaf - 1);
        splits.push_back(mask);
    }
    std::sort(splits.begin(), splits.end());
    return splits;
}

std::vector<int> shape_key(const BinaryTree& tree) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(tree.num_edges()));
    for (int e = 1; e <= tree.num_edges(); ++e) {
        Cut cut = edge_cut(tree, e);
        key.push_back(static_cast<int>(std::min(cut.side1.size(), cut.side2.size())));
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace minfill
