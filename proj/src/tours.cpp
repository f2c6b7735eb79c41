#include "minfill/tours.hpp"

#include <algorithm>
#include <sstream>

namespace minfill {

std::vector<long> walk_edge_counts(const std::vector<int>& sequence, int n) {
    std::vector<long> w(static_cast<std::size_t>(pair_count(n)), 0);
    for (std::size_t t = 0; t < sequence.size(); ++t) {
        int a = sequence[t];
        int b = sequence[(t + 1) % sequence.size()];
        if (a == b) throw DomainError("walk repeats a label in consecutive positions");
        ++w[static_cast<std::size_t>(pair_index(std::min(a, b), std::max(a, b), n))];
    }
    return w;
}

MultiTour tour_from_vertex(const DualVertex& vertex, int n) {
    MultiTour tour;
    tour.n = n;
    tour.k = vertex.multiplicity;
    if (vertex.coords.size() != static_cast<std::size_t>(pair_count(n)))
        throw DomainError("vertex dimension does not match n");

    tour.w.assign(vertex.coords.size(), 0);
    for (std::size_t q = 0; q < vertex.coords.size(); ++q) {
        Rat scaled = vertex.coords[q] * 2 * tour.k;
        if (denominator(scaled) != 1 || scaled < 0)
            throw DomainError("2k * coords is not a non-negative integer vector");
        tour.w[q] = static_cast<long>(Int(numerator(scaled)));
    }

    // Degree of point i is sum_j w_ij = 2k (each boundary row of C(G) sums
    // the coordinates), even by construction; verified defensively.
    std::vector<std::vector<long>> count(static_cast<std::size_t>(n) + 1,
                                         std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long c = tour.w[static_cast<std::size_t>(pair_index(i, j, n))];
            count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
            count[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
        }
    for (int i = 1; i <= n; ++i) {
        long deg = 0;
        for (int j = 1; j <= n; ++j) deg += count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (deg % 2 != 0) throw DomainError("odd degree in tour multigraph at point " + std::to_string(i));
    }

    // Connectivity of the support (every point has degree 2k > 0).
    {
        std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> stack{1};
        visited[1] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 1; u <= n; ++u)
                if (count[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0 &&
                    !visited[static_cast<std::size_t>(u)]) {
                    visited[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::vector<int> unreachable;
        for (int v = 1; v <= n; ++v)
            if (!visited[static_cast<std::size_t>(v)]) unreachable.push_back(v);
        if (!unreachable.empty()) {
            std::ostringstream msg;
            msg << "tour multigraph is disconnected; unreachable points:";
            for (int v : unreachable) msg << ' ' << v;
            throw DomainError(msg.str());
        }
    }

    // Hierholzer, smallest-neighbor preference.
    std::vector<int> circuit;
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int v = stack.back();
        int next = 0;
        for (int u = 1; u <= n; ++u)
            if (count[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0) {
                next = u;
                break;
            }
        if (next != 0) {
            --count[static_cast<std::size_t>(v)][static_cast<std::size_t>(next)];
            --count[static_cast<std::size_t>(next)][static_cast<std::size_t>(v)];
            stack.push_back(next);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    circuit.pop_back();  // closed walk: last vertex repeats the start
    tour.sequence = std::move(circuit);

    if (tour.sequence.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(tour.k))
        throw DomainError("Eulerian walk did not use every edge (disconnected multigraph?)");
    if (walk_edge_counts(tour.sequence, n) != tour.w)
        throw std::logic_error("tour reconstruction does not reproduce its edge counts");
    return tour;
}

long validate_multitour(const BinaryTree& tree, const MultiTour& tour) {
    const int n = tree.n;
    if (tour.n != n) throw DomainError("tour boundary size does not match the tree");
    const std::size_t len = tour.sequence.size();
    if (len != static_cast<std::size_t>(n) * static_cast<std::size_t>(tour.k))
        throw DomainError("tour length must be n*k");

    std::vector<long> occurrences(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t t = 0; t < len; ++t) {
        int a = tour.sequence[t];
        int b = tour.sequence[(t + 1) % len];
        if (a < 1 || a > n) throw DomainError("tour label out of range");
        if (a == b) throw DomainError("tour repeats a label in consecutive positions");
        ++occurrences[static_cast<std::size_t>(a)];
    }
    for (int v = 1; v <= n; ++v)
        if (occurrences[static_cast<std::size_t>(v)] != tour.k)
            throw DomainError("point " + std::to_string(v) + " occurs " +
                              std::to_string(occurrences[static_cast<std::size_t>(v)]) +
                              " times, expected k=" + std::to_string(tour.k));

    // Paths of consecutive pairs must cross every tree edge equally often.
    std::vector<std::vector<std::uint32_t>> masks(
        static_cast<std::size_t>(n) + 1, std::vector<std::uint32_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            masks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                masks[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    path_edge_mask(tree, i, j);

    std::vector<long> crossings(static_cast<std::size_t>(tree.num_edges()), 0);
    for (std::size_t t = 0; t < len; ++t) {
        int a = tour.sequence[t];
        int b = tour.sequence[(t + 1) % len];
        std::uint32_t mask = masks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        for (int e = 0; e < tree.num_edges(); ++e)
            if (mask & (1u << e)) ++crossings[static_cast<std::size_t>(e)];
    }
    long c0 = crossings[0];
    for (int e = 0; e < tree.num_edges(); ++e)
        if (crossings[static_cast<std::size_t>(e)] != c0)
            throw DomainError("not matched with the tree: edge " + std::to_string(e + 1) +
                              " is crossed " + std::to_string(crossings[static_cast<std::size_t>(e)]) +
                              " times vs " + std::to_string(c0) + " for edge 1");
    if (c0 % 2 != 0) throw DomainError("odd crossing count " + std::to_string(c0));
    long m = c0 / 2;
    if (m != tour.k)
        throw DomainError("tour multiplicity mismatch: matched multiplicity m=" + std::to_string(m) +
                          " but cyclic-order multiplicity k=" + std::to_string(tour.k));
    return m;
}

Rat multi_perimeter(const MultiTour& tour, const MetricSpace& space) {
    if (space.size() < tour.n) throw DomainError("tour labels exceed the metric space size");
    Rat total = 0;
    const std::size_t len = tour.sequence.size();
    for (std::size_t t = 0; t < len; ++t) {
        int a = tour.sequence[t];
        int b = tour.sequence[(t + 1) % len];
        total += space.at(a, b);
    }
    return total / (2 * tour.k);
}

std::string render_tour(const MultiTour& tour) {
    std::ostringstream out;
    out << "k=" << tour.k << ": ";
    for (std::size_t t = 0; t < tour.sequence.size(); ++t) {
        if (t) out << '-';
        out << tour.sequence[t];
    }
    return out.str();
}

}  // namespace minfill
