#include "minfill/random_metrics.hpp"

#include "minfill/fillings.hpp"
#include "minfill/trees.hpp"

namespace minfill {

MetricSpace random_pseudometric(int n, std::mt19937_64& rng) {
    std::vector<BinaryTree> topologies = enumerate_topologies(n);
    const BinaryTree& tree =
        topologies[static_cast<std::size_t>(rng() % topologies.size())];

    WeightedTree wt;
    wt.tree = tree;
    wt.omega.reserve(static_cast<std::size_t>(tree.num_edges()));
    for (int e = 0; e < tree.num_edges(); ++e)
        wt.omega.push_back(Rat(1 + static_cast<long>(rng() % 9)));

    std::vector<Rat> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat noise = Rat(static_cast<long>(rng() % 17)) / 4;
            Rat value = path_weight(wt, i, j) + 4 + noise;
            d[static_cast<std::size_t>(i - 1) * n + (j - 1)] = value;
            d[static_cast<std::size_t>(j - 1) * n + (i - 1)] = value;
        }
    return MetricSpace(n, std::move(d), /*strict=*/true);
}

}  // namespace minfill
