#include "minfill/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace minfill {

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned long long>(n - k + i) /
                 static_cast<unsigned long long>(i);
    }
    return result;
}

namespace {

// Lexicographic combination machinery over column indices 0..p-1.

std::vector<int> unrank_combination(unsigned long long rank, int p, int r) {
    std::vector<int> comb(static_cast<std::size_t>(r));
    int c = 0;
    for (int i = 0; i < r; ++i) {
        while (true) {
            unsigned long long block = binomial(p - c - 1, r - i - 1);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        comb[static_cast<std::size_t>(i)] = c++;
    }
    return comb;
}

bool next_combination(std::vector<int>& comb, int p) {
    int r = static_cast<int>(comb.size());
    for (int i = r - 1; i >= 0; --i) {
        if (comb[static_cast<std::size_t>(i)] < p - r + i) {
            int v = ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j) comb[static_cast<std::size_t>(j)] = ++v;
            return true;
        }
    }
    return false;
}

// Fraction-free (Bareiss) elimination over int64. All intermediate entries
// are minors of the 0/1 input, bounded by 9477 for orders up to 13, so
// 64-bit arithmetic is exact here; the r <= 16 guard keeps it that way.
constexpr int kMaxBareissOrder = 16;

// Reduces the augmented matrix a (r rows, cols >= r columns) in place to
// upper-triangular form; returns the determinant of the leading r x r block
// (0 when singular).
long long bareiss_triangularize(std::vector<long long>& a, int r, int cols) {
    auto at = [&](int i, int j) -> long long& {
        return a[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)];
    };
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < r; ++k) {
        int pivot = -1;
        for (int i = k; i < r; ++i)
            if (at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < r; ++i) {
            for (int j = k + 1; j < cols; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(r - 1, r - 1);
}

// Solves B x = (1,...,1) exactly for a 0/1 matrix B given as r columns of
// the cut matrix. On success returns det != 0 and z with x_i = z_i / det.
bool solve_unit_system(const CutMatrix& m, const std::vector<int>& columns, long long& det,
                       std::vector<long long>& z) {
    const int r = m.rows;
    const int cols = r + 1;
    std::vector<long long> a(static_cast<std::size_t>(r) * cols);
    for (int i = 0; i < r; ++i) {
        for (int t = 0; t < r; ++t)
            a[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(t)] =
                m.at(i, columns[static_cast<std::size_t>(t)]);
        a[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(r)] = 1;
    }
    det = bareiss_triangularize(a, r, cols);
    if (det == 0) return false;

    auto at = [&](int i, int j) -> long long {
        return a[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)];
    };
    z.assign(static_cast<std::size_t>(r), 0);
    for (int i = r - 1; i >= 0; --i) {
        long long num = det * at(i, r);
        for (int j = i + 1; j < r; ++j) num -= at(i, j) * z[static_cast<std::size_t>(j)];
        // z_i = det * x_i is an integer (Cramer), so the division is exact.
        long long q = num / at(i, i);
        if (q * at(i, i) != num) throw std::logic_error("non-exact division in basis solve");
        z[static_cast<std::size_t>(i)] = q;
    }
    return true;
}

struct Candidate {
    std::vector<Rat> coords;
    std::vector<int> basis;
};

void enumerate_range(const CutMatrix& m, unsigned long long begin, unsigned long long end,
                     std::vector<Candidate>& out) {
    if (begin >= end) return;
    const int r = m.rows;
    const int p = m.cols;
    std::vector<int> comb = unrank_combination(begin, p, r);
    long long det = 0;
    std::vector<long long> z;
    for (unsigned long long idx = begin; idx < end; ++idx) {
        if (solve_unit_system(m, comb, det, z)) {
            bool feasible = true;
            for (long long zi : z)
                if ((zi < 0) != (det < 0) && zi != 0) {
                    feasible = false;
                    break;
                }
            if (feasible) {
                Candidate cand;
                cand.coords.assign(static_cast<std::size_t>(p), Rat(0));
                for (int t = 0; t < r; ++t)
                    cand.coords[static_cast<std::size_t>(comb[static_cast<std::size_t>(t)])] =
                        Rat(Int(z[static_cast<std::size_t>(t)])) / Rat(Int(det));
                cand.basis = comb;
                out.push_back(std::move(cand));
            }
        }
        if (idx + 1 < end) next_combination(comb, p);
    }
}

}  // namespace

long vertex_multiplicity(const std::vector<Rat>& coords) {
    Int l = lcm_denominators(coords);
    Int k = (l % 2 == 0) ? l / 2 : l;
    if (k < 1) k = 1;
    return static_cast<long>(k);
}

std::vector<DualVertex> enumerate_vertices(const CutMatrix& m, int jobs) {
    if (m.rows > kMaxBareissOrder)
        throw DomainError("vertex enumeration supports at most n=9 boundary points");
    if (rational_rank(m) != m.rows)
        throw DomainError("cut matrix is rank deficient: expected full row rank " +
                          std::to_string(m.rows));

    const unsigned long long total = binomial(m.cols, m.rows);
    jobs = std::max(1, jobs);
    if (static_cast<unsigned long long>(jobs) > total) jobs = static_cast<int>(total);

    std::vector<std::vector<Candidate>> buckets(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        enumerate_range(m, 0, total, buckets[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            unsigned long long begin = total * static_cast<unsigned long long>(t) /
                                       static_cast<unsigned long long>(jobs);
            unsigned long long end = total * static_cast<unsigned long long>(t + 1) /
                                     static_cast<unsigned long long>(jobs);
            workers.emplace_back(
                [&m, begin, end, &bucket = buckets[static_cast<std::size_t>(t)]] {
                    enumerate_range(m, begin, end, bucket);
                });
        }
        for (auto& w : workers) w.join();
    }

    // First basis in lexicographic enumeration order wins for each point.
    std::map<std::vector<Rat>, std::vector<int>> merged;
    for (auto& bucket : buckets)
        for (auto& cand : bucket) merged.emplace(std::move(cand.coords), std::move(cand.basis));

    std::vector<DualVertex> vertices;
    vertices.reserve(merged.size());
    for (auto& [coords, basis] : merged) {
        DualVertex v;
        v.coords = coords;
        v.basis = basis;
        v.multiplicity = vertex_multiplicity(v.coords);
        vertices.push_back(std::move(v));
    }
    return vertices;  // std::map iteration is already lexicographic in coords
}

long max_basis_determinant(const CutMatrix& m) {
    if (m.rows > kMaxBareissOrder)
        throw DomainError("determinant sweep supports at most n=9 boundary points");
    const int r = m.rows;
    const int p = m.cols;
    std::vector<int> comb(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) comb[static_cast<std::size_t>(i)] = i;
    long best = 0;
    std::vector<long long> a(static_cast<std::size_t>(r) * r);
    while (true) {
        for (int i = 0; i < r; ++i)
            for (int t = 0; t < r; ++t)
                a[static_cast<std::size_t>(i) * r + static_cast<std::size_t>(t)] =
                    m.at(i, comb[static_cast<std::size_t>(t)]);
        long long det = bareiss_triangularize(a, r, r);
        best = std::max(best, static_cast<long>(std::llabs(det)));
        if (!next_combination(comb, p)) break;
    }
    if (best == 0) throw DomainError("matrix has no invertible basis submatrix");
    return best;
}

std::string render_vertex(const DualVertex& v) {
    Int denom = lcm_denominators(v.coords);
    std::ostringstream out;
    out << "1/" << denom.str() << ": (";
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i) out << ',';
        out << (Int(numerator(v.coords[i])) * (denom / denominator(v.coords[i]))).str();
    }
    out << ")";
    return out.str();
}

}  // namespace minfill
