#pragma once

#include "minfill/metric.hpp"
#include "minfill/polytope.hpp"
#include "minfill/simplex.hpp"
#include "minfill/tours.hpp"
#include "minfill/trees.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minfill {

/// A tree with exact rational edge weights, indexed by edge id - 1.
/// Weights may be negative (generalized fillings); classical fillings
/// additionally require omega >= 0.
struct WeightedTree {
    BinaryTree tree;
    std::vector<Rat> omega;
};

/// Outcome of a minimal-parametric-filling computation for one tree type:
/// weight = <d, witness_vertex.coords> = sum of optimal_omega weights.
struct FillingResult {
    Rat weight;
    DualVertex witness_vertex;
    MultiTour witness_tour;
    WeightedTree optimal_omega;
    BinaryTree tree;
};

/// Total weight along the unique i-j leaf path.
Rat path_weight(const WeightedTree& wt, int i, int j);

/// First pair (i,j) whose path weight falls below d_ij, if any.
std::optional<std::pair<int, int>> filling_violation(const MetricSpace& space,
                                                     const WeightedTree& wt);

/// True iff every leaf pair's path weight dominates its distance.
bool is_filling(const MetricSpace& space, const WeightedTree& wt);

struct PrimalResult {
    Rat weight;
    WeightedTree omega;
};

/// Least total weight subject to the path-domination constraints, solved by
/// the exact simplex oracle; nonneg restricts to classical fillings.
PrimalResult mpf_primal(const MetricSpace& space, const BinaryTree& tree, bool nonneg);

/// Weight of the generalized minimal parametric filling of this type via the
/// dual route: maximize <d, lambda> over the enumerated vertices of Lambda_G.
/// The returned optimizer comes from the primal oracle and the two weights
/// are cross-checked for exact equality.
FillingResult mpf_dual(const MetricSpace& space, const BinaryTree& tree);
FillingResult mpf_dual(const MetricSpace& space, const BinaryTree& tree,
                       const std::vector<DualVertex>& vertices);

/// Minimal filling: minimum of mpf_dual over all labeled topologies. Ties
/// break toward the lexicographically least tree serialization.
FillingResult mf(const MetricSpace& space, int jobs = 1);

/// Checks that the topology-minimum with sign-free weights equals the
/// topology-minimum with non-negative weights, exactly.
bool mf_equality_check(const MetricSpace& space);

/// One multi-perimeter expression: coefficient vector over pairs with a
/// common denominator, Sum coeffs[q] d_q / denom.
struct Formula {
    long denom = 1;
    std::vector<long> coeffs;
    int n = 0;
};

struct FormulaDoc {
    BinaryTree tree;
    std::vector<Formula> formulas;
};

/// Closed-form weight document for a tree type: one multi-perimeter
/// expression per vertex of its dual polyhedron, in vertex order; the type's
/// minimal parametric filling weight is the maximum of the list.
FormulaDoc emit_formula(const BinaryTree& tree);

Formula formula_from_vertex(const DualVertex& vertex, int n);
std::string formula_text(const Formula& f);
std::string formula_latex(const Formula& f);

}  // namespace minfill
