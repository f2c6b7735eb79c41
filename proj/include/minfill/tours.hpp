#pragma once

#include "minfill/metric.hpp"
#include "minfill/polytope.hpp"
#include "minfill/trees.hpp"

#include <string>
#include <vector>

namespace minfill {

/// A multi-cyclic order of multiplicity k on {1..n} together with the edge
/// multiplicities of its closed walk in the complete graph: sequence has
/// length nk, visits every label exactly k times, never repeats a label in
/// consecutive (cyclic) positions, and w[pair_index(i,j)] counts the
/// occurrences of edge ij in the walk.
struct MultiTour {
    std::vector<int> sequence;
    long k = 1;
    std::vector<long> w;
    int n = 0;
};

/// Edge-occurrence vector of the cyclic walk through `sequence`.
std::vector<long> walk_edge_counts(const std::vector<int>& sequence, int n);

/// Reconstructs the multi-tour behind a dual vertex: w = 2k * coords is the
/// edge multiset of a multigraph in which every point has even degree 2k, so
/// a closed Eulerian walk through all edges exists. The walk is canonical:
/// start at label 1, always prefer the smallest available neighbor.
///
/// Throws if the support multigraph is disconnected (impossible for genuine
/// vertices of Λ_G) or some degree is odd.
MultiTour tour_from_vertex(const DualVertex& vertex, int n);

/// Checks that the tour is matched with the tree: every tree edge must be
/// crossed by the same even number 2m of consecutive-pair paths, and m must
/// equal the tour multiplicity k. Returns m; throws DomainError otherwise.
long validate_multitour(const BinaryTree& tree, const MultiTour& tour);

/// Length of the closed walk in the metric, divided by 2k.
Rat multi_perimeter(const MultiTour& tour, const MetricSpace& space);

/// "k=1: 1-2-3-4"
std::string render_tour(const MultiTour& tour);

}  // namespace minfill
