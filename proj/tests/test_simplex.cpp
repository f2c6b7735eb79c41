#include "minfill/simplex.hpp"

#include "minfill/cuts.hpp"
#include "minfill/metric.hpp"
#include "minfill/polytope.hpp"
#include "minfill/random_metrics.hpp"
#include "minfill/trees.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace minfill;
using namespace minfill::simplex;

namespace {

// The dual problem for a tree and metric as a canonical-form LP:
// minimize -sum d_ij lambda_ij subject to C(G) lambda = 1, lambda >= 0.
StandardLP dual_lp(const MetricSpace& space, const BinaryTree& tree) {
    CutMatrix cm = build_cut_matrix(tree);
    StandardLP lp;
    lp.A.assign(static_cast<std::size_t>(cm.rows),
                std::vector<Rat>(static_cast<std::size_t>(cm.cols), Rat(0)));
    lp.b.assign(static_cast<std::size_t>(cm.rows), Rat(1));
    lp.c.resize(static_cast<std::size_t>(cm.cols));
    for (int r = 0; r < cm.rows; ++r)
        for (int c = 0; c < cm.cols; ++c) lp.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = cm.at(r, c);
    for (int q = 0; q < cm.cols; ++q) {
        auto [i, j] = pair_from_index(q, tree.n);
        lp.c[static_cast<std::size_t>(q)] = -space.at(i, j);
    }
    return lp;
}

MetricSpace line_metric(int n) {
    std::vector<Rat> d(static_cast<std::size_t>(n) * n, Rat(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            d[static_cast<std::size_t>(i - 1) * n + (j - 1)] = std::abs(i - j);
    return MetricSpace(n, std::move(d), true);
}

}  // namespace

TEST_CASE("standard-form conversion splits free variables and adds slacks") {
    // Path-domination system for the four-point chain with free weights:
    // 5 variables split into 10 columns plus 6 surplus columns.
    BinaryTree tree = caterpillar_tree(4);
    GeneralLP lp;
    lp.objective.assign(5, Rat(1));
    lp.nonneg.assign(5, false);
    MetricSpace line = line_metric(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            LinearConstraint con;
            con.coeffs.assign(5, Rat(0));
            for (int e : path_edges(tree, i, j)) con.coeffs[static_cast<std::size_t>(e - 1)] = 1;
            con.rel = Relation::GreaterEq;
            con.rhs = line.at(i, j);
            lp.constraints.push_back(con);
        }
    auto [std_lp, map] = to_standard_form(lp);
    CHECK(std_lp.rows() == 6);
    CHECK(std_lp.cols() == 16);
    CHECK(map.minus_col[0] == 1);

    SolveResult res = solve(std_lp);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.value == 3);
    std::vector<Rat> omega = map.recover(res.x);
    Rat total = 0;
    for (const Rat& w : omega) total += w;
    CHECK(total == 3);
}

TEST_CASE("a single upper bound gets one slack; equalities get none") {
    GeneralLP lp;
    lp.objective = {Rat(-1)};
    lp.nonneg = {true};
    lp.constraints.push_back({{Rat(1)}, Relation::LessEq, Rat(1)});
    auto [std_lp, map] = to_standard_form(lp);
    CHECK(std_lp.cols() == 2);
    CHECK(std_lp.rows() == 1);
    CHECK(map.plus_col[0] == 0);
    CHECK(map.minus_col[0] == -1);
    SolveResult res = solve(std_lp);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.value == -1);
    CHECK(map.recover(res.x)[0] == 1);

    GeneralLP eq;
    eq.objective = {Rat(1), Rat(1)};
    eq.nonneg = {true, true};
    eq.constraints.push_back({{Rat(1), Rat(1)}, Relation::Equal, Rat(1)});
    CHECK(to_standard_form(eq).first.cols() == 2);  // no slack columns
}

TEST_CASE("contradictory equalities are infeasible") {
    StandardLP lp;
    lp.A = {{Rat(1)}, {Rat(1)}};
    lp.b = {Rat(0), Rat(1)};
    lp.c = {Rat(1)};
    CHECK(solve(lp).status == SolveStatus::Infeasible);
}

TEST_CASE("minimizing -x with x >= 0 unconstrained is unbounded") {
    StandardLP lp;
    lp.A = {};
    lp.b = {};
    lp.c = {Rat(-1)};
    CHECK(solve(lp).status == SolveStatus::Unbounded);
}

TEST_CASE("redundant rows are tolerated") {
    StandardLP lp;
    lp.A = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    lp.b = {Rat(1), Rat(2)};
    lp.c = {Rat(1), Rat(3)};
    SolveResult res = solve(lp);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.value == 1);
    CHECK(res.x == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("dual problem on the line metric reaches 3") {
    SolveResult res = solve(dual_lp(line_metric(4), caterpillar_tree(4)));
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(-res.value == 3);
}

TEST_CASE("simplex optimum equals the vertex-enumeration maximum") {
    // Both routes on every reference tree and on 200 random spaces.
    std::mt19937_64 rng(2024);
    std::map<std::string, std::vector<DualVertex>> cache;
    auto vertices_of = [&](const BinaryTree& tree) -> const std::vector<DualVertex>& {
        auto [it, inserted] = cache.try_emplace(to_newick(tree));
        if (inserted) it->second = enumerate_vertices(build_cut_matrix(tree));
        return it->second;
    };
    auto check_routes = [&](const MetricSpace& space, const BinaryTree& tree) {
        Rat best = 0;
        bool first = true;
        for (const DualVertex& v : vertices_of(tree)) {
            Rat h = 0;
            for (int i = 1; i <= space.size(); ++i)
                for (int j = i + 1; j <= space.size(); ++j)
                    h += space.at(i, j) *
                         v.coords[static_cast<std::size_t>(pair_index(i, j, space.size()))];
            if (first || h > best) best = h;
            first = false;
        }
        SolveResult res = solve(dual_lp(space, tree));
        REQUIRE(res.status == SolveStatus::Optimal);
        CHECK(-res.value == best);
    };

    for (int n : {4, 5, 6}) {
        MetricSpace space = random_pseudometric(n, rng);
        check_routes(space, caterpillar_tree(n));
        if (n == 6) check_routes(space, snowflake_tree(6));
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + trial % 3;
        MetricSpace space = random_pseudometric(n, rng);
        std::vector<BinaryTree> trees = enumerate_topologies(n);
        check_routes(space, trees[static_cast<std::size_t>(rng() % trees.size())]);
    }
}

TEST_CASE("returned optimizers are exactly feasible with matching objective") {
    StandardLP lp;
    lp.A = {{Rat(1), Rat(2), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(5), Rat(1)}};
    lp.b = {Rat(7), Rat(9)};
    lp.c = {Rat(2), Rat(1), Rat(1), Rat(3)};
    SolveResult res = solve(lp);
    REQUIRE(res.status == SolveStatus::Optimal);
    verify_solution(lp, res.x);  // throws on violation
    Rat value = 0;
    for (std::size_t j = 0; j < res.x.size(); ++j) value += lp.c[j] * res.x[j];
    CHECK(value == res.value);

    CHECK_THROWS_AS(verify_solution(lp, std::vector<Rat>(4, Rat(0))), std::logic_error);
}
