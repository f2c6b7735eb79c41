#include "minfill/cuts.hpp"

#include "minfill/metric.hpp"

#include <sstream>

namespace minfill {

CutMatrix build_cut_matrix(const BinaryTree& tree) {
    validate_tree(tree);
    CutMatrix m;
    m.n = tree.n;
    m.rows = tree.num_edges();
    m.cols = pair_count(tree.n);
    m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int e = 1; e <= m.rows; ++e) {
        Cut cut = edge_cut(tree, e);
        std::vector<char> in_side1(static_cast<std::size_t>(tree.n) + 1, 0);
        for (int leaf : cut.side1) in_side1[static_cast<std::size_t>(leaf)] = 1;
        for (int i = 1; i <= tree.n; ++i)
            for (int j = i + 1; j <= tree.n; ++j)
                if (in_side1[static_cast<std::size_t>(i)] != in_side1[static_cast<std::size_t>(j)])
                    m.a[static_cast<std::size_t>(e - 1) * m.cols + pair_index(i, j, tree.n)] = 1;
    }
    return m;
}

int rational_rank(const std::vector<std::vector<Rat>>& input) {
    std::vector<std::vector<Rat>> m = input;
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // Pivot on the largest numerator magnitude in this column.
        std::size_t pivot = rank;
        Int best = abs(numerator(m[rank][col]));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Int mag = abs(numerator(m[r][col]));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (m[pivot][col] == 0) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rational_rank(const CutMatrix& cm) {
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(cm.rows),
                                    std::vector<Rat>(static_cast<std::size_t>(cm.cols)));
    for (int r = 0; r < cm.rows; ++r)
        for (int c = 0; c < cm.cols; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = cm.at(r, c);
    return rational_rank(m);
}

std::string render_cut_matrix(const CutMatrix& m) {
    std::ostringstream out;
    for (int q = 0; q < m.cols; ++q) {
        auto [i, j] = pair_from_index(q, m.n);
        if (q) out << ' ';
        out << pair_label(i, j);
    }
    out << "\n";
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out << ' ';
            out << static_cast<int>(m.at(r, c));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace minfill
