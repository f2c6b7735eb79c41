#pragma once

#include "minfill/rational.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace minfill {

/// A finite pseudo-metric space: n points with an exact rational distance
/// matrix. Symmetry, zero diagonal and non-negativity always hold; the
/// triangle inequality is enforced only when constructed in strict mode
/// (distances between distinct points may be zero).
///
/// Immutable after construction; safe to share across threads.
class MetricSpace {
public:
    MetricSpace(int n, std::vector<Rat> entries, bool strict,
                std::vector<std::string> labels = {});

    int size() const { return n_; }

    /// Distance between points i and j, 1-based.
    const Rat& at(int i, int j) const { return d_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const MetricSpace& other) const {
        return n_ == other.n_ && d_ == other.d_ && labels_ == other.labels_;
    }

private:
    int n_;
    std::vector<Rat> d_;  // row-major n x n
    std::vector<std::string> labels_;
};

/// Reads the plain-text metric format: first non-comment line is n, then n
/// rows of n whitespace-separated rationals; '#' starts a comment line; an
/// optional "labels:" line carries n point names.
MetricSpace parse_metric(std::istream& in, bool strict);

/// JSON alternative: {"n": int, "d": [row-major rationals as strings],
/// "labels": [...]} (labels optional).
MetricSpace parse_metric_json(const std::string& text, bool strict);

/// Dispatches on the file extension (.json vs text).
MetricSpace load_metric_file(const std::string& path, bool strict);

/// Renders in the plain-text format; parse_metric(render_metric(m)) == m.
std::string render_metric(const MetricSpace& m);

int pair_count(int n);

/// 0-based position of (i,j), i<j, in the lexicographic pair order
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
int pair_index(int i, int j, int n);

/// Inverse of pair_index.
std::pair<int, int> pair_from_index(int q, int n);

std::string pair_label(int i, int j);

}  // namespace minfill
