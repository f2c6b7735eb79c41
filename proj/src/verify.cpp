#include "minfill/verify.hpp"

#include "minfill/cuts.hpp"
#include "minfill/fillings.hpp"
#include "minfill/golden.hpp"
#include "minfill/polytope.hpp"
#include "minfill/random_metrics.hpp"
#include "minfill/tours.hpp"
#include "minfill/trees.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

namespace minfill {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Rat dual_objective(const MetricSpace& space, const std::vector<Rat>& coords) {
    Rat h = 0;
    const int n = space.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            h += space.at(i, j) * coords[static_cast<std::size_t>(pair_index(i, j, n))];
    return h;
}

long multiplicity_bound(int n) { return 1L << (2 * n - 5); }

bool matrix_matches(const CutMatrix& got, const std::vector<std::vector<int>>& want,
                    std::string& why) {
    if (got.rows != static_cast<int>(want.size()) ||
        (got.rows > 0 && got.cols != static_cast<int>(want[0].size()))) {
        why = "cut matrix dimensions differ";
        return false;
    }
    for (int r = 0; r < got.rows; ++r)
        for (int c = 0; c < got.cols; ++c)
            if (static_cast<int>(got.at(r, c)) !=
                want[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                why = "cut matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                      ") differs";
                return false;
            }
    return true;
}

bool vertex_set_matches(const std::vector<DualVertex>& got,
                        const std::vector<std::vector<Rat>>& want, std::string& why) {
    if (got.size() != want.size()) {
        why = "expected " + std::to_string(want.size()) + " vertices, found " +
              std::to_string(got.size());
        return false;
    }
    std::set<std::vector<Rat>> want_set(want.begin(), want.end());
    for (const DualVertex& v : got)
        if (!want_set.erase(v.coords)) {
            why = "enumerated vertex " + render_vertex(v) + " is not in the reference list";
            return false;
        }
    return true;
}

bool formula_set_matches(const std::vector<DualVertex>& vertices, int n,
                         const std::vector<std::string>& want, std::string& why) {
    std::vector<std::string> got;
    got.reserve(vertices.size());
    for (const DualVertex& v : vertices) got.push_back(formula_text(formula_from_vertex(v, n)));
    std::vector<std::string> expect = want;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    if (got != expect) {
        why = "formula lists differ";
        return false;
    }
    return true;
}

long count_multiplicity(const std::vector<DualVertex>& vs, long k) {
    return static_cast<long>(
        std::count_if(vs.begin(), vs.end(), [k](const DualVertex& v) { return v.multiplicity == k; }));
}

CheckResult check_golden(const std::string& name, const golden::Polytope& g, long expect_mult1,
                         long expect_mult2, int jobs) {
    CheckResult result;
    result.name = name;
    std::string why;
    CutMatrix cm = build_cut_matrix(g.tree);
    if (!matrix_matches(cm, g.matrix, why)) {
        result.detail = why;
        return result;
    }
    std::vector<DualVertex> vs = enumerate_vertices(cm, jobs);
    if (!vertex_set_matches(vs, golden::vertex_coords(g), why) ||
        !formula_set_matches(vs, g.n, g.formulas_text, why)) {
        result.detail = why;
        return result;
    }
    if (count_multiplicity(vs, 1) != expect_mult1 || count_multiplicity(vs, 2) != expect_mult2) {
        result.detail = "multiplicity counts differ from the reference";
        return result;
    }
    if (g.n == 4) {
        std::vector<std::string> latex;
        for (const DualVertex& v : vs) latex.push_back(formula_latex(formula_from_vertex(v, 4)));
        std::vector<std::string> expect = golden::formulas4_latex();
        std::sort(latex.begin(), latex.end());
        std::sort(expect.begin(), expect.end());
        if (latex != expect) {
            result.detail = "latex formula lists differ";
            return result;
        }
    }
    result.pass = true;
    result.detail = std::to_string(vs.size()) + " vertices match";
    return result;
}

CheckResult check_golden6(int jobs) {
    CheckResult result;
    result.name = "golden n=6: both types, vertex lists, shared vertices";
    CheckResult cat = check_golden("", golden::caterpillar6(), 8, 0, jobs);
    if (!cat.pass) {
        result.detail = "two-moustache type: " + cat.detail;
        return result;
    }
    CheckResult snow = check_golden("", golden::snowflake6(), 8, 4, jobs);
    if (!snow.pass) {
        result.detail = "three-moustache type: " + snow.detail;
        return result;
    }

    auto cat_coords = golden::vertex_coords(golden::caterpillar6());
    auto snow_coords = golden::vertex_coords(golden::snowflake6());
    std::vector<DualVertex> cat_vs = enumerate_vertices(build_cut_matrix(caterpillar_tree(6)), jobs);
    std::vector<DualVertex> snow_vs = enumerate_vertices(build_cut_matrix(snowflake_tree(6)), jobs);
    auto contains = [](const std::vector<DualVertex>& vs, const std::vector<Rat>& coords) {
        return std::any_of(vs.begin(), vs.end(),
                           [&](const DualVertex& v) { return v.coords == coords; });
    };
    for (auto [a, b] : golden::shared_vertex_pairs6()) {
        if (cat_coords[static_cast<std::size_t>(a)] != snow_coords[static_cast<std::size_t>(b)]) {
            result.detail = "reference vertices " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1) + " are not equal";
            return result;
        }
        if (!contains(cat_vs, cat_coords[static_cast<std::size_t>(a)]) ||
            !contains(snow_vs, snow_coords[static_cast<std::size_t>(b)])) {
            result.detail = "shared vertex missing from an enumerated polytope";
            return result;
        }
    }
    result.pass = true;
    result.detail = "8 + 12 vertices match, 4 shared vertices confirmed";
    return result;
}

CheckResult check_counts7(int jobs) {
    CheckResult result;
    result.name = "n=7 vertex counts (16 and 32) and multiplicities";
    const double per_tree_limit = 60.0;
    std::ostringstream detail;

    struct Expectation {
        BinaryTree tree;
        std::size_t count;
        long max_mult;
        const char* label;
    };
    std::vector<Expectation> cases = {
        {caterpillar_tree(7), 16, 1, "two-moustache"},
        {snowflake_tree(7), 32, 2, "three-moustache"},
    };
    for (const auto& c : cases) {
        auto start = Clock::now();
        std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(c.tree), jobs);
        double secs = elapsed_seconds(start);
        long max_mult = 0;
        for (const DualVertex& v : vs) max_mult = std::max(max_mult, v.multiplicity);
        detail << c.label << ": " << vs.size() << " vertices, max multiplicity " << max_mult
               << ", " << secs << " s; ";
        if (vs.size() != c.count) {
            result.detail = detail.str() + "count mismatch";
            return result;
        }
        if (max_mult != c.max_mult) {
            result.detail = detail.str() + "multiplicity mismatch";
            return result;
        }
        if (secs >= per_tree_limit) {
            result.detail = detail.str() + "per-tree time limit exceeded";
            return result;
        }
    }
    result.pass = true;
    result.detail = detail.str();
    return result;
}

CheckResult check_rank_lemma() {
    CheckResult result;
    result.name = "cut matrix rank is 2n-3 for every topology, n=3..7";
    long checked = 0;
    for (int n = 3; n <= 7; ++n) {
        for (const BinaryTree& tree : enumerate_topologies(n)) {
            if (rational_rank(build_cut_matrix(tree)) != 2 * n - 3) {
                result.detail = "rank deficiency at n=" + std::to_string(n) + ", tree " +
                                to_newick(tree);
                return result;
            }
            ++checked;
        }
    }
    result.pass = true;
    result.detail = std::to_string(checked) + " topologies checked";
    return result;
}

CheckResult check_bounds(int jobs) {
    CheckResult result;
    result.name = "multiplicity bound 2^(2n-5) (n=3..7) and determinant bound (n=3..6)";
    std::ostringstream detail;
    for (int n = 3; n <= 6; ++n) {
        long bound = multiplicity_bound(n);
        long max_mult = 0, max_det = 0;
        for (const BinaryTree& tree : enumerate_topologies(n)) {
            CutMatrix cm = build_cut_matrix(tree);
            for (const DualVertex& v : enumerate_vertices(cm, jobs)) {
                max_mult = std::max(max_mult, v.multiplicity);
                if (v.multiplicity > bound) {
                    result.detail = "multiplicity " + std::to_string(v.multiplicity) +
                                    " exceeds bound at n=" + std::to_string(n);
                    return result;
                }
            }
            long det = max_basis_determinant(cm);
            max_det = std::max(max_det, det);
            if (det > bound) {
                result.detail = "basis determinant " + std::to_string(det) +
                                " exceeds bound at n=" + std::to_string(n);
                return result;
            }
        }
        detail << "n=" << n << ": max mult " << max_mult << ", max det " << max_det << " (bound "
               << bound << "); ";
    }
    // n=7: one representative per unlabeled shape; relabeling permutes the
    // vertex coordinates, so multiplicity multisets are shape-invariant.
    {
        long bound = multiplicity_bound(7);
        long max_mult = 0;
        for (const BinaryTree& tree : {caterpillar_tree(7), snowflake_tree(7)}) {
            for (const DualVertex& v : enumerate_vertices(build_cut_matrix(tree), jobs)) {
                max_mult = std::max(max_mult, v.multiplicity);
                if (v.multiplicity > bound) {
                    result.detail = "multiplicity exceeds bound at n=7";
                    return result;
                }
            }
        }
        detail << "n=7 (per shape): max mult " << max_mult << " (bound " << bound << ")";
    }
    result.pass = true;
    result.detail = detail.str();
    return result;
}

struct CertStats {
    long checked = 0;
    long failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

CheckResult check_strong_duality(std::uint64_t seed, int jobs, CertStats& certs) {
    CheckResult result;
    result.name = "strong duality: dual vertex maximum equals primal simplex minimum (200 spaces)";
    std::mt19937_64 rng(seed);

    // Vertex sets do not depend on the metric; enumerate once per topology.
    std::vector<std::vector<BinaryTree>> topologies(7);
    std::vector<std::vector<std::vector<DualVertex>>> cache(7);
    for (int n = 4; n <= 6; ++n) {
        topologies[static_cast<std::size_t>(n)] = enumerate_topologies(n);
        for (const BinaryTree& tree : topologies[static_cast<std::size_t>(n)])
            cache[static_cast<std::size_t>(n)].push_back(
                enumerate_vertices(build_cut_matrix(tree), jobs));
    }

    long instances = 0;
    for (int idx = 0; idx < 200; ++idx) {
        int n = 4 + idx % 3;
        MetricSpace space = random_pseudometric(n, rng);
        const auto& trees = topologies[static_cast<std::size_t>(n)];
        for (std::size_t t = 0; t < trees.size(); ++t) {
            const auto& vs = cache[static_cast<std::size_t>(n)][t];
            Rat dual = dual_objective(space, vs.front().coords);
            for (std::size_t v = 1; v < vs.size(); ++v)
                dual = std::max(dual, dual_objective(space, vs[v].coords));
            PrimalResult primal = mpf_primal(space, trees[t], /*nonneg=*/false);
            ++instances;
            if (dual != primal.weight) {
                result.detail = "dual " + rat_to_string(dual) + " != primal " +
                                rat_to_string(primal.weight) + " on space " + std::to_string(idx);
                return result;
            }
            Rat total = std::accumulate(primal.omega.omega.begin(), primal.omega.omega.end(), Rat(0));
            certs.record(is_filling(space, primal.omega) && total == primal.weight,
                         "optimizer certificate on space " + std::to_string(idx));
        }
    }
    result.pass = true;
    result.detail = std::to_string(instances) + " space/topology instances, exact agreement";
    return result;
}

CheckResult check_mf_equality(std::uint64_t seed, CertStats& certs) {
    CheckResult result;
    result.name = "generalized and classical minimal filling weights agree (100 spaces)";
    std::mt19937_64 rng(seed + 1);
    for (int idx = 0; idx < 100; ++idx) {
        int n = 4 + idx % 2;
        MetricSpace space = random_pseudometric(n, rng);
        std::optional<Rat> free_min, nonneg_min;
        for (const BinaryTree& tree : enumerate_topologies(n)) {
            PrimalResult f = mpf_primal(space, tree, /*nonneg=*/false);
            PrimalResult g = mpf_primal(space, tree, /*nonneg=*/true);
            certs.record(is_filling(space, f.omega), "free optimizer certificate");
            bool nonneg_ok = std::all_of(g.omega.omega.begin(), g.omega.omega.end(),
                                         [](const Rat& w) { return w >= 0; });
            certs.record(is_filling(space, g.omega) && nonneg_ok,
                         "nonnegative optimizer certificate");
            if (!free_min || f.weight < *free_min) free_min = f.weight;
            if (!nonneg_min || g.weight < *nonneg_min) nonneg_min = g.weight;
        }
        if (*free_min != *nonneg_min) {
            result.detail = "minima differ on space " + std::to_string(idx) + ": " +
                            rat_to_string(*free_min) + " vs " + rat_to_string(*nonneg_min);
            return result;
        }
    }
    result.pass = true;
    result.detail = "100 spaces, both minima equal exactly";
    return result;
}

CheckResult check_tour_coherence(std::uint64_t seed) {
    CheckResult result;
    result.name = "tour coherence: reconstruction, matching, and perimeter identities";
    std::mt19937_64 rng(seed + 2);
    const golden::Polytope* fixtures[] = {&golden::caterpillar4(), &golden::caterpillar5(),
                                          &golden::caterpillar6(), &golden::snowflake6()};
    long tours = 0;
    for (const golden::Polytope* g : fixtures) {
        std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(g->tree));
        std::vector<MultiTour> walks;
        for (const DualVertex& v : vs) {
            MultiTour tour = tour_from_vertex(v, g->n);
            long m = validate_multitour(g->tree, tour);
            if (m != v.multiplicity) {
                result.detail = "matched multiplicity differs from vertex multiplicity";
                return result;
            }
            walks.push_back(std::move(tour));
            ++tours;
        }
        for (int trial = 0; trial < 20; ++trial) {
            MetricSpace space = random_pseudometric(g->n, rng);
            for (std::size_t v = 0; v < vs.size(); ++v)
                if (multi_perimeter(walks[v], space) != dual_objective(space, vs[v].coords)) {
                    result.detail = "multi-perimeter differs from the dual objective";
                    return result;
                }
        }
    }
    result.pass = true;
    result.detail = std::to_string(tours) + " fixture vertices, 20 metrics each";
    return result;
}

template <typename F>
CheckResult timed(F&& f) {
    auto start = Clock::now();
    CheckResult result = f();
    result.seconds = elapsed_seconds(start);
    return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(timed([&] {
        return check_golden("golden n=4: cut matrix, vertices, formulas", golden::caterpillar4(),
                            2, 0, options.jobs);
    }));
    results.push_back(timed([&] {
        return check_golden("golden n=5: cut matrix, vertices, formulas", golden::caterpillar5(),
                            4, 0, options.jobs);
    }));
    results.push_back(timed([&] { return check_golden6(options.jobs); }));
    if (options.slow) results.push_back(timed([&] { return check_counts7(options.jobs); }));
    results.push_back(timed([&] { return check_rank_lemma(); }));
    if (options.slow) results.push_back(timed([&] { return check_bounds(options.jobs); }));

    CertStats certs;
    results.push_back(timed([&] { return check_strong_duality(options.seed, options.jobs, certs); }));
    results.push_back(timed([&] { return check_mf_equality(options.seed, certs); }));
    results.push_back(timed([&] { return check_tour_coherence(options.seed); }));

    CheckResult cert_result;
    cert_result.name = "filling certificates for every solved instance (bundled)";
    cert_result.pass = certs.failures == 0 && certs.checked > 0;
    cert_result.detail = cert_result.pass
                             ? std::to_string(certs.checked) + " optimizers feasible with exact weight"
                             : certs.first_failure;
    results.push_back(cert_result);
    return results;
}

}  // namespace minfill
