#include "minfill/fillings.hpp"

#include "minfill/cuts.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace minfill {

Rat path_weight(const WeightedTree& wt, int i, int j) {
    Rat total = 0;
    for (int e : path_edges(wt.tree, i, j)) total += wt.omega[static_cast<std::size_t>(e - 1)];
    return total;
}

std::optional<std::pair<int, int>> filling_violation(const MetricSpace& space,
                                                     const WeightedTree& wt) {
    if (space.size() != wt.tree.n)
        throw DomainError("metric size does not match the tree boundary");
    if (wt.omega.size() != static_cast<std::size_t>(wt.tree.num_edges()))
        throw DomainError("weight vector does not match the edge count");
    for (int i = 1; i <= space.size(); ++i)
        for (int j = i + 1; j <= space.size(); ++j)
            if (path_weight(wt, i, j) < space.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

bool is_filling(const MetricSpace& space, const WeightedTree& wt) {
    return !filling_violation(space, wt).has_value();
}

PrimalResult mpf_primal(const MetricSpace& space, const BinaryTree& tree, bool nonneg) {
    if (space.size() != tree.n)
        throw DomainError("metric size does not match the tree boundary");
    const int ne = tree.num_edges();

    simplex::GeneralLP lp;
    lp.objective.assign(static_cast<std::size_t>(ne), Rat(1));
    lp.nonneg.assign(static_cast<std::size_t>(ne), nonneg);
    for (int i = 1; i <= tree.n; ++i)
        for (int j = i + 1; j <= tree.n; ++j) {
            simplex::LinearConstraint con;
            con.coeffs.assign(static_cast<std::size_t>(ne), Rat(0));
            for (int e : path_edges(tree, i, j)) con.coeffs[static_cast<std::size_t>(e - 1)] = 1;
            con.rel = simplex::Relation::GreaterEq;
            con.rhs = space.at(i, j);
            lp.constraints.push_back(std::move(con));
        }

    auto [std_lp, map] = simplex::to_standard_form(lp);
    simplex::SolveResult res = simplex::solve(std_lp);
    if (res.status != simplex::SolveStatus::Optimal)
        throw std::logic_error("filling LP must be solvable (uniform large weights are feasible)");

    PrimalResult out;
    out.omega.tree = tree;
    out.omega.omega = map.recover(res.x);
    out.weight = std::accumulate(out.omega.omega.begin(), out.omega.omega.end(), Rat(0));
    if (out.weight != res.value)
        throw std::logic_error("recovered weights do not reproduce the LP optimum");
    if (!is_filling(space, out.omega))
        throw std::logic_error("simplex optimizer violates a path constraint");
    return out;
}

FillingResult mpf_dual(const MetricSpace& space, const BinaryTree& tree) {
    return mpf_dual(space, tree, enumerate_vertices(build_cut_matrix(tree)));
}

FillingResult mpf_dual(const MetricSpace& space, const BinaryTree& tree,
                       const std::vector<DualVertex>& vertices) {
    if (space.size() != tree.n)
        throw DomainError("metric size does not match the tree boundary");
    if (vertices.empty()) throw std::logic_error("dual polyhedron has no vertices");

    auto objective = [&](const DualVertex& v) {
        Rat h = 0;
        for (int i = 1; i <= tree.n; ++i)
            for (int j = i + 1; j <= tree.n; ++j)
                h += space.at(i, j) * v.coords[static_cast<std::size_t>(pair_index(i, j, tree.n))];
        return h;
    };

    const DualVertex* best = &vertices.front();
    Rat best_value = objective(vertices.front());
    for (std::size_t t = 1; t < vertices.size(); ++t) {
        Rat h = objective(vertices[t]);
        if (h > best_value) {
            best_value = h;
            best = &vertices[t];
        }
    }

    FillingResult result;
    result.tree = tree;
    result.weight = best_value;
    result.witness_vertex = *best;
    result.witness_tour = tour_from_vertex(*best, tree.n);

    PrimalResult primal = mpf_primal(space, tree, /*nonneg=*/false);
    if (primal.weight != result.weight)
        throw std::logic_error("dual maximum " + rat_to_string(result.weight) +
                               " disagrees with primal minimum " + rat_to_string(primal.weight));
    result.optimal_omega = std::move(primal.omega);
    return result;
}

FillingResult mf(const MetricSpace& space, int jobs) {
    if (space.size() < 3) throw DomainError("minimal filling needs n >= 3");
    std::vector<BinaryTree> topologies = enumerate_topologies(space.size());
    std::vector<FillingResult> results(topologies.size());

    jobs = std::max(1, jobs);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
            results[t] = mpf_dual(space, topologies[t]);
    };
    if (jobs == 1 || topologies.size() < 2) {
        work(0, topologies.size());
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (topologies.size() + static_cast<std::size_t>(jobs) - 1) /
                            static_cast<std::size_t>(jobs);
        for (std::size_t begin = 0; begin < topologies.size(); begin += chunk)
            workers.emplace_back(work, begin, std::min(begin + chunk, topologies.size()));
        for (auto& w : workers) w.join();
    }

    std::size_t best = 0;
    std::string best_key = to_newick(results[0].tree);
    for (std::size_t t = 1; t < results.size(); ++t) {
        std::string key = to_newick(results[t].tree);
        if (results[t].weight < results[best].weight ||
            (results[t].weight == results[best].weight && key < best_key)) {
            best = t;
            best_key = key;
        }
    }
    return results[best];
}

bool mf_equality_check(const MetricSpace& space) {
    if (space.size() < 3) throw DomainError("minimal filling needs n >= 3");
    std::vector<BinaryTree> topologies = enumerate_topologies(space.size());
    std::optional<Rat> free_min, nonneg_min;
    for (const BinaryTree& tree : topologies) {
        Rat f = mpf_primal(space, tree, /*nonneg=*/false).weight;
        Rat g = mpf_primal(space, tree, /*nonneg=*/true).weight;
        if (!free_min || f < *free_min) free_min = f;
        if (!nonneg_min || g < *nonneg_min) nonneg_min = g;
    }
    return *free_min == *nonneg_min;
}

Formula formula_from_vertex(const DualVertex& vertex, int n) {
    Formula f;
    f.n = n;
    Int denom = lcm_denominators(vertex.coords);
    f.denom = static_cast<long>(denom);
    f.coeffs.reserve(vertex.coords.size());
    for (const Rat& q : vertex.coords)
        f.coeffs.push_back(static_cast<long>(Int(numerator(q)) * (denom / denominator(q))));
    return f;
}

FormulaDoc emit_formula(const BinaryTree& tree) {
    FormulaDoc doc;
    doc.tree = tree;
    for (const DualVertex& v : enumerate_vertices(build_cut_matrix(tree)))
        doc.formulas.push_back(formula_from_vertex(v, tree.n));
    return doc;
}

std::string formula_text(const Formula& f) {
    std::ostringstream out;
    out << "1/" << f.denom << " (";
    bool first = true;
    for (std::size_t q = 0; q < f.coeffs.size(); ++q) {
        if (f.coeffs[q] == 0) continue;
        if (!first) out << " + ";
        first = false;
        auto [i, j] = pair_from_index(static_cast<int>(q), f.n);
        if (f.coeffs[q] != 1) out << f.coeffs[q] << ' ';
        out << 'd' << i << j;
    }
    out << ")";
    return out.str();
}

std::string formula_latex(const Formula& f) {
    std::ostringstream out;
    out << "\\frac{1}{" << f.denom << "}\\bigl(";
    bool first = true;
    for (std::size_t q = 0; q < f.coeffs.size(); ++q) {
        if (f.coeffs[q] == 0) continue;
        if (!first) out << '+';
        first = false;
        auto [i, j] = pair_from_index(static_cast<int>(q), f.n);
        if (f.coeffs[q] != 1) out << f.coeffs[q];
        out << "d_{" << i << j << "}";
    }
    out << "\\bigr)";
    return out.str();
}

}  // namespace minfill
