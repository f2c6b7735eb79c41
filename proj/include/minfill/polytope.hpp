#pragma once

#include "minfill/cuts.hpp"
#include "minfill/rational.hpp"

#include <cstdint>
#include <vector>

namespace minfill {

/// A vertex (angular point) of the dual polyhedron
///   Λ_G = { λ >= 0 : C(G) λ = (1,...,1) },
/// as a basic feasible solution: coords vanish outside `basis`, whose
/// columns are linearly independent in C(G).
struct DualVertex {
    std::vector<Rat> coords;  // length n(n-1)/2, exact and non-negative
    std::vector<int> basis;   // 2n-3 column indices, 0-based ascending;
                              // lexicographically least witnessing basis
    long multiplicity = 1;    // least k >= 1 with 2k*coords integral
};

/// Enumerates every vertex of Λ_G exactly, by solving B·x = 1 for each
/// invertible (2n-3)-column submatrix B and keeping the non-negative
/// solutions. Distinct bases yielding the same degenerate point are merged.
/// Output is sorted lexicographically by coordinates and is identical for
/// any job count.
///
/// Throws if the matrix does not have full row rank.
std::vector<DualVertex> enumerate_vertices(const CutMatrix& m, int jobs = 1);

long vertex_multiplicity(const std::vector<Rat>& coords);

/// Maximum |det| over all invertible (2n-3)x(2n-3) column submatrices.
long max_basis_determinant(const CutMatrix& m);

unsigned long long binomial(int n, int k);

/// "1/2: (1,0,1,1,0,1)" -- common denominator, then the scaled integer tuple.
std::string render_vertex(const DualVertex& v);

}  // namespace minfill
