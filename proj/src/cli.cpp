#include "minfill/cli.hpp"

#include "minfill/cuts.hpp"
#include "minfill/fillings.hpp"
#include "minfill/golden.hpp"
#include "minfill/metric.hpp"
#include "minfill/polytope.hpp"
#include "minfill/rational.hpp"
#include "minfill/simplex.hpp"
#include "minfill/tours.hpp"
#include "minfill/trees.hpp"
#include "minfill/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace minfill {

namespace {

using nlohmann::json;

BinaryTree resolve_tree(const std::string& newick, const std::string& shape, int n) {
    if (!newick.empty()) return parse_newick(newick);
    if (!shape.empty()) {
        if (n < 3) throw DomainError("--shape needs --n");
        return tree_by_shape(shape, n);
    }
    throw DomainError("a tree is required: pass --tree NEWICK or --shape NAME with --n");
}

json vertex_to_json(const DualVertex& v, int n) {
    json coords = json::array();
    for (const Rat& q : v.coords) coords.push_back(rat_to_string(q));
    json basis = json::array();
    for (int col : v.basis) {
        auto [i, j] = pair_from_index(col, n);
        basis.push_back(pair_label(i, j));
    }
    return json{{"coords", coords}, {"multiplicity", v.multiplicity}, {"basis", basis}};
}

json filling_to_json(const FillingResult& r) {
    json vertex = json::array();
    for (const Rat& q : r.witness_vertex.coords) vertex.push_back(rat_to_string(q));
    json tour = json::array();
    for (int label : r.witness_tour.sequence) tour.push_back(label);
    json omega = json::object();
    for (std::size_t e = 0; e < r.optimal_omega.omega.size(); ++e)
        omega[std::to_string(e + 1)] = rat_to_string(r.optimal_omega.omega[e]);
    return json{{"tree", to_newick(r.tree)},
                {"weight", rat_to_string(r.weight)},
                {"vertex", vertex},
                {"tour", tour},
                {"omega", omega}};
}

void print_filling_text(const FillingResult& r, std::ostream& out) {
    out << "tree: " << to_newick(r.tree) << "\n";
    out << "weight: " << rat_to_string(r.weight) << "\n";
    out << "vertex: " << render_vertex(r.witness_vertex) << "\n";
    out << "tour: " << render_tour(r.witness_tour) << "\n";
    out << "omega:";
    for (std::size_t e = 0; e < r.optimal_omega.omega.size(); ++e)
        out << ' ' << (e + 1) << '=' << rat_to_string(r.optimal_omega.omega[e]);
    out << "\n";
}

simplex::StandardLP lp_from_json(const json& j) {
    simplex::StandardLP lp;
    for (const auto& row : j.at("A")) {
        std::vector<Rat> r;
        for (const auto& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
        lp.A.push_back(std::move(r));
    }
    for (const auto& cell : j.at("b")) lp.b.push_back(parse_rational(cell.get<std::string>()));
    for (const auto& cell : j.at("c")) lp.c.push_back(parse_rational(cell.get<std::string>()));
    if (lp.A.size() != lp.b.size()) throw DomainError("A and b row counts differ");
    return lp;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimal fillings of finite pseudo-metric spaces via exact LP duality",
                 "minfill"};
    app.require_subcommand(1);

    std::string metric_path, tree_newick, shape, format = "text", lp_path;
    int n = 0;
    int jobs = 1;
    std::uint64_t seed = 12347;
    bool strict = false, slow = false;

    auto add_format = [&](CLI::App* cmd, bool latex_ok) {
        std::vector<std::string> allowed = {"text", "json"};
        if (latex_ok) allowed.push_back("latex");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->default_val("text");
    };
    auto add_tree_options = [&](CLI::App* cmd) {
        cmd->add_option("--tree", tree_newick, "tree as a Newick string over leaves 1..n");
        cmd->add_option("--shape", shape, "named shape: caterpillar or snowflake");
        cmd->add_option("--n", n, "boundary size for --shape");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a metric file");
    validate->add_option("--metric", metric_path, "metric file")->required();
    validate->add_flag("--strict", strict, "enforce the triangle inequality");
    add_format(validate, false);

    CLI::App* topologies = app.add_subcommand("topologies", "list all labeled binary trees");
    topologies->add_option("--n", n, "boundary size")->required();
    add_format(topologies, false);

    CLI::App* cutmatrix = app.add_subcommand("cutmatrix", "print the cut matrix of a tree");
    add_tree_options(cutmatrix);
    add_format(cutmatrix, false);

    CLI::App* vertices = app.add_subcommand("vertices", "enumerate the dual polyhedron vertices");
    add_tree_options(vertices);
    vertices->add_option("--jobs", jobs, "worker count");
    add_format(vertices, false);

    CLI::App* tours = app.add_subcommand("tours", "multi-tours behind the dual vertices");
    add_tree_options(tours);
    tours->add_option("--jobs", jobs, "worker count");
    add_format(tours, true);

    CLI::App* formula = app.add_subcommand("formula", "closed-form weight expressions");
    add_tree_options(formula);
    add_format(formula, true);

    CLI::App* mpf_cmd = app.add_subcommand("mpf", "minimal parametric filling for one tree type");
    mpf_cmd->add_option("--metric", metric_path, "metric file")->required();
    add_tree_options(mpf_cmd);
    mpf_cmd->add_flag("--strict", strict, "enforce the triangle inequality");
    add_format(mpf_cmd, false);

    CLI::App* mf_cmd = app.add_subcommand("mf", "minimal filling over all tree types");
    mf_cmd->add_option("--metric", metric_path, "metric file")->required();
    mf_cmd->add_flag("--strict", strict, "enforce the triangle inequality");
    mf_cmd->add_option("--jobs", jobs, "worker count");
    add_format(mf_cmd, false);

    CLI::App* verify = app.add_subcommand("verify", "run the reference verification suite");
    verify->add_flag("--slow", slow, "include the n=7 and bound sweeps");
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_option("--jobs", jobs, "worker count");

    CLI::App* lp_debug = app.add_subcommand("lp-debug", "solve a canonical-form LP from JSON");
    lp_debug->add_option("--lp", lp_path, "LP file: {\"A\": [[..]], \"b\": [..], \"c\": [..]}")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) {
            MetricSpace space = load_metric_file(metric_path, strict);
            if (format == "json")
                out << json{{"ok", true}, {"n", space.size()}, {"strict", strict}}.dump() << "\n";
            else
                out << "ok: " << space.size() << "-point pseudo-metric"
                    << (strict ? " (triangle inequality verified)" : "") << "\n";
        } else if (*topologies) {
            std::vector<BinaryTree> trees = enumerate_topologies(n);
            if (format == "json") {
                json names = json::array();
                for (const BinaryTree& t : trees) names.push_back(to_newick(t));
                out << json{{"n", n}, {"count", trees.size()}, {"trees", names}}.dump() << "\n";
            } else {
                for (const BinaryTree& t : trees) out << to_newick(t) << "\n";
            }
        } else if (*cutmatrix) {
            BinaryTree tree = resolve_tree(tree_newick, shape, n);
            CutMatrix cm = build_cut_matrix(tree);
            if (format == "json") {
                json pairs = json::array(), rows = json::array();
                for (int q = 0; q < cm.cols; ++q) {
                    auto [i, j] = pair_from_index(q, cm.n);
                    pairs.push_back(pair_label(i, j));
                }
                for (int r = 0; r < cm.rows; ++r) {
                    json row = json::array();
                    for (int c = 0; c < cm.cols; ++c) row.push_back(static_cast<int>(cm.at(r, c)));
                    rows.push_back(row);
                }
                out << json{{"n", cm.n}, {"rows", cm.rows}, {"cols", cm.cols},
                            {"pairs", pairs}, {"matrix", rows}}.dump()
                    << "\n";
            } else {
                out << render_cut_matrix(cm);
            }
        } else if (*vertices) {
            BinaryTree tree = resolve_tree(tree_newick, shape, n);
            std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(tree), jobs);
            if (format == "json") {
                json arr = json::array();
                for (const DualVertex& v : vs) arr.push_back(vertex_to_json(v, tree.n));
                out << arr.dump() << "\n";
            } else {
                for (const DualVertex& v : vs) out << render_vertex(v) << "\n";
            }
        } else if (*tours) {
            BinaryTree tree = resolve_tree(tree_newick, shape, n);
            std::vector<DualVertex> vs = enumerate_vertices(build_cut_matrix(tree), jobs);
            json arr = json::array();
            for (const DualVertex& v : vs) {
                MultiTour tour = tour_from_vertex(v, tree.n);
                Formula f = formula_from_vertex(v, tree.n);
                if (format == "json") {
                    json seq = json::array();
                    for (int label : tour.sequence) seq.push_back(label);
                    arr.push_back(json{{"k", tour.k}, {"sequence", seq},
                                       {"perimeter", formula_text(f)}});
                } else if (format == "latex") {
                    out << formula_latex(f) << "\n";
                } else {
                    out << render_tour(tour) << "  " << formula_text(f) << "\n";
                }
            }
            if (format == "json") out << arr.dump() << "\n";
        } else if (*formula) {
            BinaryTree tree = resolve_tree(tree_newick, shape, n);
            FormulaDoc doc = emit_formula(tree);
            if (format == "json") {
                json arr = json::array();
                for (const Formula& f : doc.formulas)
                    arr.push_back(json{{"text", formula_text(f)}, {"latex", formula_latex(f)}});
                out << json{{"tree", to_newick(doc.tree)}, {"count", doc.formulas.size()},
                            {"formulas", arr}}.dump()
                    << "\n";
            } else if (format == "latex") {
                for (const Formula& f : doc.formulas) out << formula_latex(f) << "\n";
            } else {
                out << "type: " << to_newick(doc.tree) << "\n";
                out << "minimal parametric filling weight = max of:\n";
                for (const Formula& f : doc.formulas) out << "  " << formula_text(f) << "\n";
            }
        } else if (*mpf_cmd) {
            MetricSpace space = load_metric_file(metric_path, strict);
            BinaryTree tree = resolve_tree(tree_newick, shape, shape.empty() ? 0 : space.size());
            FillingResult result = mpf_dual(space, tree);
            if (format == "json")
                out << filling_to_json(result).dump() << "\n";
            else
                print_filling_text(result, out);
        } else if (*mf_cmd) {
            MetricSpace space = load_metric_file(metric_path, strict);
            FillingResult result = mf(space, jobs);
            if (format == "json")
                out << filling_to_json(result).dump() << "\n";
            else
                print_filling_text(result, out);
        } else if (*verify) {
            VerifyOptions options;
            options.seed = seed;
            options.jobs = jobs;
            options.slow = slow;
            bool all_pass = true;
            for (const CheckResult& r : run_verification(options)) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
                if (!r.pass) {
                    all_pass = false;
                    err << "  " << r.name << ": " << r.detail << "\n";
                }
            }
            return all_pass ? 0 : 1;
        } else if (*lp_debug) {
            std::ifstream in(lp_path);
            if (!in) throw DomainError("cannot open LP file '" + lp_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            simplex::StandardLP lp = lp_from_json(json::parse(buf.str()));
            simplex::SolveResult res = simplex::solve(lp);
            json output;
            if (res.status == simplex::SolveStatus::Optimal) {
                json x = json::array();
                for (const Rat& xi : res.x) x.push_back(rat_to_string(xi));
                output = json{{"status", "optimal"}, {"value", rat_to_string(res.value)}, {"x", x}};
            } else {
                output = json{{"status", res.status == simplex::SolveStatus::Infeasible
                                             ? "infeasible"
                                             : "unbounded"}};
            }
            out << output.dump() << "\n";
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace minfill
