#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "cfcolor/colorers.hpp"
#include "cfcolor/few_edges.hpp"
#include "cfcolor/intervals.hpp"
#include "cfcolor/json_io.hpp"
#include "cfcolor/oracle.hpp"
#include "cfcolor/planar.hpp"
#include "cfcolor/refinement.hpp"
#include "cfcolor/rng.hpp"
#include "cfcolor/svg.hpp"

using namespace cfcolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

enum class Kind { hypergraph, points, discs, graph };

Kind kind_of(const Json& j) {
    if (j.contains("points")) return Kind::points;
    if (j.contains("discs")) return Kind::discs;
    if (j.contains("adj")) return Kind::graph;
    if (j.contains("edges")) return Kind::hypergraph;
    throw InputError("unrecognized instance file");
}

// True iff the hypergraph is exactly H_n with vertex ids as positions.
bool is_interval_hypergraph(const Hypergraph& h) {
    const long long n = h.vertex_count();
    if (h.edge_count() != n * (n + 1) / 2) return false;
    std::set<std::vector<int>> edges(h.edges().begin(), h.edges().end());
    for (int s = 0; s < n; ++s) {
        std::vector<int> e;
        for (int t = s; t < n; ++t) {
            e.push_back(t);
            if (!edges.count(e)) return false;
        }
    }
    return true;
}

struct GenOptions {
    std::string kind;
    std::string out;
    int n = 7;
    int rows = 3;
    int cols = 3;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

PointSet generate_points(CounterRng& rng, int n, bool need_cocircular_free) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        std::vector<Point> pts;
        std::set<std::pair<long long, long long>> seen;
        while (static_cast<int>(pts.size()) < n) {
            Point p{rng.next_int(-50, 50), rng.next_int(-50, 50)};
            if (seen.insert({p.x, p.y}).second) pts.push_back(p);
        }
        PointSet ps(pts);
        if (!ps.no_three_collinear()) continue;
        if (need_cocircular_free && !ps.no_four_cocircular()) continue;
        return ps;
    }
    throw InputError("could not sample a general-position point set");
}

DiscFamily generate_discs(CounterRng& rng, int n) {
    std::vector<Disc> discs;
    int attempts = 0;
    while (static_cast<int>(discs.size()) < n) {
        if (++attempts > 5000)
            throw InputError("could not sample a non-degenerate disc family");
        Disc d{rng.next_int(-20, 20), rng.next_int(-20, 20),
               rng.next_int(4, 150)};
        auto copy = discs;
        copy.push_back(d);
        try {
            build_region_hypergraph(DiscFamily(copy));
            discs.push_back(d);
        } catch (const InputError&) {
        }
    }
    return DiscFamily(discs);
}

int run_gen(const GenOptions& opt) {
    Json out;
    if (opt.kind == "intervals") {
        out = hypergraph_to_json(build_interval_hypergraph(opt.n));
    } else if (opt.kind == "grid") {
        out = graph_to_json(make_grid_graph(opt.rows, opt.cols));
    } else if (opt.kind == "star") {
        out = graph_to_json(make_star_graph(opt.n));
    } else if (opt.kind == "points-discs" || opt.kind == "points-halfplanes") {
        if (!opt.seed_set) throw InputError("--seed is required for random kinds");
        CounterRng rng(opt.seed);
        out = points_to_json(
            generate_points(rng, opt.n, opt.kind == "points-discs"));
    } else if (opt.kind == "discs") {
        if (!opt.seed_set) throw InputError("--seed is required for random kinds");
        CounterRng rng(opt.seed);
        out = discs_to_json(generate_discs(rng, opt.n));
    } else {
        throw InputError("unknown kind: " + opt.kind);
    }
    save_json_file(opt.out, out);
    std::cout << "wrote " << opt.out << "\n";
    return kExitOk;
}

struct ColorOptions {
    std::string instance;
    std::string algorithm;
    std::string lists = "theorem";
    std::string family = "discs";
    std::string out = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool guard_override = false;
};

ColorListFamily policy_lists(const std::string& policy, int n,
                             const std::vector<int>& theorem_sizes) {
    if (policy.rfind("uniform:", 0) == 0) {
        int l = 0;
        try {
            l = std::stoi(policy.substr(8));
        } catch (const std::exception&) {
            throw InputError("bad uniform list size in policy: " + policy);
        }
        return ColorListFamily::uniform(n, l);
    }
    if (policy == "theorem") {
        std::vector<std::vector<int>> lists(n);
        for (int v = 0; v < n; ++v) {
            lists[v].resize(theorem_sizes[v]);
            for (int c = 0; c < theorem_sizes[v]; ++c) lists[v][c] = c + 1;
        }
        return ColorListFamily(std::move(lists));
    }
    if (policy.rfind("file:", 0) == 0)
        return lists_from_json(load_json_file(policy.substr(5)));
    throw InputError("unknown list policy: " + policy);
}

struct ColoredOutput {
    Hypergraph hypergraph;  // verification target
    ColorListFamily lists;
    Coloring coloring;
    std::optional<PotentialTrace> trace;
    bool verified_on_target = true;  // false when a guard skipped verification
};

// Potential run that escalates the exact colorer class count until every
// induced sub-hypergraph it meets is colorable.
UmListResult potential_with_escalation(const Hypergraph& h,
                                       const ColorListFamily& lists) {
    for (int k = 2; k <= std::max(2, h.vertex_count()); ++k) {
        try {
            return um_color_from_lists(h, lists, make_exact_colorer(k));
        } catch (const ExactColorInfeasible&) {
        }
    }
    throw InfeasibleError("no class count admits a hereditary proper coloring");
}

int run_color(const ColorOptions& opt) {
    const Json instance = load_json_file(opt.instance);
    const Kind kind = kind_of(instance);
    std::filesystem::create_directories(opt.out);

    ColoredOutput result;
    const auto started = std::chrono::steady_clock::now();

    if (opt.algorithm == "potential") {
        if (kind == Kind::hypergraph) {
            result.hypergraph = hypergraph_from_json(instance);
            const int n = result.hypergraph.vertex_count();
            result.lists = policy_lists(
                opt.lists, n, std::vector<int>(n, um_choice_bound(n, 2)));
            auto res =
                is_interval_hypergraph(result.hypergraph)
                    ? um_color_from_lists(result.hypergraph, result.lists,
                                          make_interval_colorer())
                    : potential_with_escalation(result.hypergraph, result.lists);
            result.coloring = res.coloring;
            result.trace = res.trace;
        } else if (kind == Kind::points) {
            PointSet p = points_from_json(instance);
            HereditaryColorer colorer;
            if (opt.family == "halfplanes") {
                result.hypergraph = build_halfplane_hypergraph(p);
                colorer = make_halfplane_colorer(p);
            } else if (opt.family == "discs") {
                result.hypergraph = build_disc_hypergraph(p);
                colorer = make_delaunay_hereditary_colorer(4);
            } else {
                throw InputError("unknown family: " + opt.family);
            }
            const int n = p.size();
            result.lists = policy_lists(
                opt.lists, n,
                std::vector<int>(n, um_choice_bound(n, colorer.k)));
            auto res =
                um_color_from_lists(result.hypergraph, result.lists, colorer);
            result.coloring = res.coloring;
            result.trace = res.trace;
        } else if (kind == Kind::discs) {
            result.hypergraph =
                build_region_hypergraph(discs_from_json(instance));
            const int n = result.hypergraph.vertex_count();
            result.lists = policy_lists(
                opt.lists, n, std::vector<int>(n, um_choice_bound(n, 4)));
            auto res = um_color_from_lists(result.hypergraph, result.lists,
                                           make_delaunay_hereditary_colorer(4));
            result.coloring = res.coloring;
            result.trace = res.trace;
        } else {  // graph: color its simple-path hypergraph
            PlanarGraph g = graph_from_json(instance);
            result.hypergraph = paths_hypergraph(g, opt.guard_override ? 20 : 14);
            const int n = g.vertex_count();
            result.lists = policy_lists(
                opt.lists, n, std::vector<int>(n, um_choice_bound(n, 2)));
            auto res = potential_with_escalation(result.hypergraph, result.lists);
            result.coloring = res.coloring;
            result.trace = res.trace;
        }
    } else if (opt.algorithm == "median") {
        result.hypergraph = hypergraph_from_json(instance);
        if (!is_interval_hypergraph(result.hypergraph))
            throw InputError("median applies to interval hypergraph instances");
        const int n = result.hypergraph.vertex_count();
        int log2n = 0;
        while ((1 << (log2n + 1)) <= n) ++log2n;
        result.lists = policy_lists(opt.lists, n, std::vector<int>(n, log2n + 1));
        result.coloring = cf_color_intervals_median(n, result.lists);
    } else if (opt.algorithm == "few-edges") {
        if (kind != Kind::hypergraph)
            throw InputError("few-edges applies to hypergraph instances");
        result.hypergraph = hypergraph_from_json(instance);
        const int n = result.hypergraph.vertex_count();
        const int s = s_of(result.hypergraph);
        std::vector<int> sizes(n);
        for (int v = 0; v < n; ++v)
            sizes[v] = std::min(degree(result.hypergraph, v) + 1, s);
        result.lists = policy_lists(opt.lists, n, sizes);
        result.coloring = um_color_few_edges(result.hypergraph, result.lists);
    } else if (opt.algorithm == "separator") {
        if (kind != Kind::graph)
            throw InputError("separator applies to graph instances");
        PlanarGraph g = graph_from_json(instance);
        const int n = g.vertex_count();
        result.lists = policy_lists(
            opt.lists, n, std::vector<int>(n, cf_paths_required_list_size(n)));
        result.coloring = cf_color_paths_from_lists(g, result.lists);
        if (n <= 14 || opt.guard_override) {
            result.hypergraph = paths_hypergraph(g, std::max(n, 14));
        } else {
            // too large to enumerate paths; skip the cf verdict
            result.hypergraph = Hypergraph(n, {});
            result.verified_on_target = false;
        }
    } else if (opt.algorithm == "refine") {
        if (!opt.seed_set) throw InputError("--seed is required for refine");
        if (kind == Kind::hypergraph)
            result.hypergraph = hypergraph_from_json(instance);
        else if (kind == Kind::points)
            result.hypergraph =
                opt.family == "halfplanes"
                    ? build_halfplane_hypergraph(points_from_json(instance))
                    : build_disc_hypergraph(points_from_json(instance));
        else if (kind == Kind::discs)
            result.hypergraph =
                build_region_hypergraph(discs_from_json(instance));
        else
            throw InputError("refine applies to hypergraph-like instances");
        const int n = result.hypergraph.vertex_count();
        auto report = exhaustive_chromatic(result.hypergraph);
        const int k = report.chi_cf;
        result.lists = policy_lists(
            opt.lists, n,
            std::vector<int>(n, choice_required_list_size(n, k)));
        auto res = choice_from_chromatic(result.hypergraph, report.witness_cf,
                                         result.lists, ColoringMode::cf,
                                         opt.seed);
        result.coloring = res.coloring;
        save_json_file(opt.out + "/witness.json", witness_to_json(res.witness));
    } else {
        throw InputError("unknown algorithm: " + opt.algorithm);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();

    // Verdicts are recomputed from the outputs, never taken from the
    // algorithm's own claims.
    Json report;
    report["instance"] = opt.instance;
    report["algorithm"] = opt.algorithm;
    report["list_policy"] = opt.lists;
    report["seed"] = opt.seed_set ? Json(opt.seed) : Json(nullptr);
    report["colors_used"] = static_cast<int>(
        std::set<int>(result.coloring.begin(), result.coloring.end()).size());
    Json verdicts;
    if (result.verified_on_target) {
        verdicts["proper"] = verify_proper(result.hypergraph, result.coloring).ok;
        verdicts["cf"] = verify_cf(result.hypergraph, result.coloring).ok;
        verdicts["um"] = verify_um(result.hypergraph, result.coloring).ok;
    } else {
        verdicts["proper"] = nullptr;
        verdicts["cf"] = nullptr;
        verdicts["um"] = nullptr;
    }
    verdicts["from_lists"] = verify_from_lists(result.coloring, result.lists);
    report["verdicts"] = verdicts;
    report["status"] = "ok";
    report["trace"] = result.trace ? Json("trace.json") : Json(nullptr);

    save_json_file(opt.out + "/coloring.json", coloring_to_json(result.coloring));
    if (result.trace)
        save_json_file(opt.out + "/trace.json", trace_to_json(*result.trace));
    save_json_file(opt.out + "/report.json", report);
    std::cout << "colored in " << elapsed << " ms; outputs in " << opt.out
              << "\n";
    return kExitOk;
}

struct PlotOptions {
    std::string instance;
    std::string coloring;
    std::string out;
};

int run_plot(const PlotOptions& opt) {
    const Json instance = load_json_file(opt.instance);
    std::optional<Coloring> coloring;
    if (!opt.coloring.empty())
        coloring = coloring_from_json(load_json_file(opt.coloring));
    const Coloring* cp = coloring ? &*coloring : nullptr;
    auto check_size = [&](int n) {
        if (coloring && static_cast<int>(coloring->size()) != n)
            throw InputError("coloring size does not match the instance");
    };

    std::string svg;
    switch (kind_of(instance)) {
        case Kind::points: {
            auto p = points_from_json(instance);
            check_size(p.size());
            svg = svg_points(p, cp);
            break;
        }
        case Kind::discs: {
            auto d = discs_from_json(instance);
            check_size(d.size());
            svg = svg_discs(d, cp);
            break;
        }
        case Kind::graph: {
            auto g = graph_from_json(instance);
            check_size(g.vertex_count());
            svg = svg_graph(g, cp);
            break;
        }
        case Kind::hypergraph: {
            auto h = hypergraph_from_json(instance);
            if (!is_interval_hypergraph(h))
                throw InputError("plot supports interval hypergraphs only");
            check_size(h.vertex_count());
            svg = svg_line(h.vertex_count(), cp);
            break;
        }
    }
    write_text_file(opt.out, svg);
    std::cout << "wrote " << opt.out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list conflict-free and unique-maximum coloring toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd
        ->add_option("--kind", gen.kind,
                     "intervals|points-discs|points-halfplanes|discs|grid|star")
        ->required();
    gen_cmd->add_option("--n", gen.n, "size parameter");
    gen_cmd->add_option("--rows", gen.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.cols, "grid columns");
    auto* gen_seed = gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--out", gen.out, "output file")->required();

    ColorOptions col;
    auto* col_cmd = app.add_subcommand("color", "run a coloring algorithm");
    col_cmd->add_option("--instance", col.instance, "instance file")->required();
    col_cmd
        ->add_option("--algorithm", col.algorithm,
                     "potential|median|few-edges|separator|refine")
        ->required();
    col_cmd->add_option("--lists", col.lists, "uniform:L|theorem|file:PATH");
    col_cmd->add_option("--family", col.family,
                        "discs|halfplanes (points instances)");
    auto* col_seed = col_cmd->add_option("--seed", col.seed, "random seed");
    col_cmd->add_option("--out", col.out, "output directory");
    col_cmd->add_flag("--guard-override", col.guard_override,
                      "opt into expensive verification");

    PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plot", "render an instance as SVG");
    plot_cmd->add_option("--instance", plot.instance, "instance file")
        ->required();
    plot_cmd->add_option("--coloring", plot.coloring, "coloring file");
    plot_cmd->add_option("--out", plot.out, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    gen.seed_set = gen_seed->count() > 0;
    col.seed_set = col_seed->count() > 0;

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (col_cmd->parsed()) return run_color(col);
        if (plot_cmd->parsed()) return run_plot(plot);
    } catch (const GuardError& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ListExhausted& e) {
        // expected infeasibility; a report still documents the run
        std::cerr << "infeasible: " << e.what() << "\n";
        if (col_cmd->parsed()) {
            try {
                std::filesystem::create_directories(col.out);
                Json report;
                report["instance"] = col.instance;
                report["algorithm"] = col.algorithm;
                report["list_policy"] = col.lists;
                report["status"] = "list-exhausted";
                report["vertex"] = e.vertex;
                save_json_file(col.out + "/report.json", report);
            } catch (...) {
            }
        }
        return kExitInfeasible;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
