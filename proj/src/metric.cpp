#include "minfill/metric.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace minfill {

MetricSpace::MetricSpace(int n, std::vector<Rat> entries, bool strict,
                         std::vector<std::string> labels)
    : n_(n), d_(std::move(entries)), labels_(std::move(labels)) {
    if (n_ < 1) throw DomainError("metric space needs at least one point");
    if (d_.size() != static_cast<std::size_t>(n_) * n_)
        throw DomainError("distance matrix size does not match n=" + std::to_string(n_));
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
        throw DomainError("label count does not match n");

    for (int i = 1; i <= n_; ++i) {
        if (at(i, i) != 0)
            throw DomainError("nonzero diagonal entry at point " + std::to_string(i));
        for (int j = 1; j <= n_; ++j) {
            if (at(i, j) < 0)
                throw DomainError("negative distance at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            if (at(i, j) != at(j, i))
                throw DomainError("asymmetric entries at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        }
    }
    if (strict) {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                for (int k = 1; k <= n_; ++k) {
                    if (i == j || j == k || i == k) continue;
                    if (at(i, k) > at(i, j) + at(j, k))
                        throw DomainError("triangle inequality violated by points (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + "): d(" + std::to_string(i) + "," +
                                          std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                                          std::to_string(j) + ") + d(" + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
                }
    }
}

MetricSpace parse_metric(std::istream& in, bool strict) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        lines.push_back(raw);
    }
    if (lines.empty()) throw DomainError("empty metric file");

    std::size_t pos = 0;
    int n = 0;
    {
        std::istringstream head(lines[pos++]);
        if (!(head >> n) || n < 1) throw DomainError("first line must be the point count n");
        std::string extra;
        if (head >> extra) throw DomainError("unexpected token after n: '" + extra + "'");
    }

    std::vector<Rat> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels;
    for (int r = 0; r < n; ++r) {
        if (pos >= lines.size())
            throw DomainError("expected " + std::to_string(n) + " matrix rows, got " +
                              std::to_string(r));
        std::istringstream row(lines[pos++]);
        std::string tok;
        int count = 0;
        while (row >> tok) {
            entries.push_back(parse_rational(tok));
            ++count;
        }
        if (count != n)
            throw DomainError("row " + std::to_string(r + 1) + " has " + std::to_string(count) +
                              " entries, expected " + std::to_string(n));
    }
    if (pos < lines.size()) {
        std::istringstream tail(lines[pos]);
        std::string key;
        tail >> key;
        if (key == "labels:") {
            std::string name;
            while (tail >> name) labels.push_back(name);
            if (labels.size() != static_cast<std::size_t>(n))
                throw DomainError("labels line must carry exactly n names");
            ++pos;
        }
    }
    if (pos < lines.size()) throw DomainError("trailing content after matrix: '" + lines[pos] + "'");
    return MetricSpace(n, std::move(entries), strict, std::move(labels));
}

MetricSpace parse_metric_json(const std::string& text, bool strict) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid metric JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("d"))
        throw DomainError("metric JSON needs fields \"n\" and \"d\"");
    int n = j.at("n").get<int>();
    std::vector<Rat> entries;
    for (const auto& cell : j.at("d")) entries.push_back(parse_rational(cell.get<std::string>()));
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& name : j.at("labels")) labels.push_back(name.get<std::string>());
    return MetricSpace(n, std::move(entries), strict, std::move(labels));
}

MetricSpace load_metric_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open metric file '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_metric_json(buf.str(), strict);
    }
    return parse_metric(in, strict);
}

std::string render_metric(const MetricSpace& m) {
    std::ostringstream out;
    out << m.size() << "\n";
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) {
            if (j > 1) out << ' ';
            out << rat_to_string(m.at(i, j));
        }
        out << "\n";
    }
    if (!m.labels().empty()) {
        out << "labels:";
        for (const auto& name : m.labels()) out << ' ' << name;
        out << "\n";
    }
    return out.str();
}

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int i, int j, int n) {
    if (i < 1 || i >= j || j > n)
        throw DomainError("pair_index requires 1 <= i < j <= n, got (" + std::to_string(i) + "," +
                          std::to_string(j) + ") with n=" + std::to_string(n));
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int q, int n) {
    if (q < 0 || q >= pair_count(n)) throw DomainError("pair index out of range");
    int i = 1;
    while (q >= n - i) {
        q -= n - i;
        ++i;
    }
    return {i, i + 1 + q};
}

std::string pair_label(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace minfill
