#pragma once

// Test-only reference implementations, deliberately independent of the
// library's solve paths: cofactor determinants instead of elimination, and
// direct convex-combination search instead of basis certificates.

#include "minfill/cuts.hpp"
#include "minfill/rational.hpp"

#include <vector>

namespace oracle {

using minfill::Rat;

inline Rat det_cofactor(const std::vector<std::vector<Rat>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    Rat total = 0;
    int sign = 1;
    for (std::size_t r = 0; r < k; ++r) {
        if (m[r][0] != 0) {
            std::vector<std::vector<Rat>> minor;
            minor.reserve(k - 1);
            for (std::size_t i = 0; i < k; ++i) {
                if (i == r) continue;
                minor.emplace_back(m[i].begin() + 1, m[i].end());
            }
            total += sign * m[r][0] * det_cofactor(minor);
        }
        sign = -sign;
    }
    return total;
}

inline std::vector<std::vector<Rat>> submatrix_columns(const minfill::CutMatrix& cm,
                                                       const std::vector<int>& columns) {
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(cm.rows));
    for (int r = 0; r < cm.rows; ++r)
        for (int c : columns) m[static_cast<std::size_t>(r)].push_back(Rat(cm.at(r, c)));
    return m;
}

// True iff v = t*x + (1-t)*y for some 0 < t < 1.
inline bool is_proper_convex_combination(const std::vector<Rat>& v, const std::vector<Rat>& x,
                                         const std::vector<Rat>& y) {
    Rat t;
    bool have_t = false;
    for (std::size_t q = 0; q < v.size(); ++q) {
        Rat dx = x[q] - y[q];
        if (dx == 0) {
            if (v[q] != y[q]) return false;
            continue;
        }
        Rat tq = (v[q] - y[q]) / dx;
        if (!have_t) {
            t = tq;
            have_t = true;
        } else if (tq != t) {
            return false;
        }
    }
    return have_t && t > 0 && t < 1;
}

}  // namespace oracle
