#include <eotile/characterize.hh>
#include <eotile/experiment.hh>
#include <eotile/io.hh>
#include <eotile/necessity.hh>
#include <eotile/tiling.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace eotile;
using nlohmann::json;

namespace
{
    constexpr int exit_decided = 0, exit_error = 1, exit_inconclusive = 2;

    struct GraphSource {
        std::string path;    // JSON document, "-" for stdin
        std::string family;  // family descriptor
    };

    void add_source(CLI::App * app, GraphSource & src, const std::string & prefix, const std::string & what)
    {
        app->add_option("--" + prefix, src.path, what + " as a JSON document ('-' reads stdin)");
        app->add_option("--" + prefix + "-family", src.family, what + " as a family descriptor, e.g. D(4)");
    }

    auto read_all(std::istream & in) -> std::string
    {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    auto load(const GraphSource & src, const std::string & what) -> EdgeOrderedGraph
    {
        if (! src.family.empty())
            return family_graph(src.family);
        if (src.path.empty())
            throw Error(ErrorCode::BadSpec, "no " + what + " given");
        if (src.path == "-")
            return parse_graph(read_all(std::cin));
        std::ifstream in(src.path, std::ios::binary);
        if (! in)
            throw Error(ErrorCode::ParseError, "cannot open " + src.path);
        return parse_graph(read_all(in));
    }

    void emit(const json & doc)
    {
        std::cout << doc.dump(2) << '\n';
    }

    void emit_graph(const EdgeOrderedGraph & g, const std::string & format)
    {
        if (format == "dot")
            std::cout << export_dot(g);
        else
            std::cout << serialize_graph(g) << '\n';
    }

    auto exit_for(Decision d) -> int
    {
        return d == Decision::Inconclusive ? exit_inconclusive : exit_decided;
    }

    auto exit_for(SearchStatus s) -> int
    {
        return s == SearchStatus::Inconclusive ? exit_inconclusive : exit_decided;
    }

    auto budget_from(std::uint64_t nodes) -> SearchBudget
    {
        auto b = default_budget();
        if (nodes > 0)
            b.node_limit = nodes;
        return b;
    }

    auto types_from(const std::string & list) -> std::vector<StarType>
    {
        std::vector<StarType> types;
        std::stringstream in(list);
        std::string item;
        while (std::getline(in, item, ';'))
            if (item.find_first_not_of(' ') != std::string::npos)
                types.push_back(parse_star_type(item));
        return types;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Edge-ordered graph tilings: generators, decision procedures, tilers and experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t nodes = 0;
    app.add_option("--budget", nodes, "search node limit (default: EOTILE_NODE_BUDGET or built-in)");

    int result = exit_decided;

    // gen
    auto gen = app.add_subcommand("gen", "generate a graph");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::string format = "json";
    gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    std::string canon_type = "Min";
    int size = 4;
    auto gen_canonical = gen->add_subcommand("canonical", "canonical ordering of K_n");
    gen_canonical->add_option("--type", canon_type, "Min, Max, InvMin or InvMax");
    gen_canonical->add_option("--n", size, "vertex count");
    gen_canonical->callback([&] { emit_graph(canonical_clique(parse_canonical_type(canon_type), size), format); });

    std::string star_type = "LargerDec x Min";
    auto gen_star = gen->add_subcommand("star", "star-canonical ordering; vertex 0 is special");
    gen_star->add_option("--type", star_type, "e.g. 'LargerDec x Min'");
    gen_star->add_option("--size", size, "vertex count");
    gen_star->callback([&] { emit_graph(star_canonical_clique(parse_star_type(star_type), size).graph, format); });

    std::string family;
    auto gen_family = gen->add_subcommand("family", "named family graph");
    gen_family->add_option("spec", family, "D(n), Dplus(n), Dminus(n), MonoCycle(n), MonoPath(k), PathRanks(...), C4_1243")->required();
    gen_family->callback([&] { emit_graph(family_graph(family), format); });

    std::string kind = "TwoCliques";
    int ext_k = 1;
    double gamma = 0.25;
    auto gen_extremal = gen->add_subcommand("extremal", "extremal construction without a perfect monotone path tiling");
    gen_extremal->add_option("--kind", kind, "TwoCliques or Bipartite");
    gen_extremal->add_option("--n", size, "vertex count");
    gen_extremal->add_option("--k", ext_k, "path length");
    gen_extremal->add_option("--gamma", gamma, "small class fraction (Bipartite)");
    gen_extremal->callback([&] { emit_graph(extremal_construction(parse_extremal_kind(kind), size, ext_k, gamma), format); });

    // check
    auto check = app.add_subcommand("check", "decide a property of a graph");
    check->require_subcommand(1);
    GraphSource subject;
    for (auto [name, help] : {std::pair{"turanable", "embeds into all four canonical orderings"},
             std::pair{"tileable", "embeds into all twenty star-canonical orderings"},
             std::pair{"universal", "every edge-ordering of the underlying graph is tileable"},
             std::pair{"extremal", "minimal and maximal vertices"}}) {
        auto sub = check->add_subcommand(name, help);
        add_source(sub, subject, "graph", "graph");
    }
    check->get_subcommand("turanable")->callback([&] {
        auto g = load(subject, "graph");
        auto v = is_turanable(g, budget_from(nodes));
        json out{{"graph", graph_to_json(g)}, {"turanable", decision_name(v.decision)}, {"nodes", v.nodes}};
        if (v.failing)
            out["failing"] = canonical_type_name(*v.failing);
        for (const auto & [t, e] : v.certificates)
            out["certificates"][canonical_type_name(t)] = embedding_to_json(e);
        emit(out);
        result = exit_for(v.decision);
    });
    check->get_subcommand("tileable")->callback([&] {
        auto g = load(subject, "graph");
        auto v = is_tileable(g, budget_from(nodes));
        json out{{"graph", graph_to_json(g)}, {"tileable", decision_name(v.decision)}, {"nodes", v.nodes}};
        if (v.failing)
            out["failing"] = star_type_name(*v.failing);
        for (const auto & [t, e] : v.certificates)
            out["certificates"][star_type_name(t)] = embedding_to_json(e);
        emit(out);
        result = exit_for(v.decision);
    });
    check->get_subcommand("universal")->callback([&] {
        auto g = load(subject, "graph");
        emit(json{{"graph", graph_to_json(g)}, {"universally_tileable", is_universally_tileable(g)}});
    });
    check->get_subcommand("extremal")->callback([&] {
        auto g = load(subject, "graph");
        auto ext = extremal_vertices(g, budget_from(nodes));
        emit(json{{"graph", graph_to_json(g)}, {"minimal", ext.minimal}, {"maximal", ext.maximal}});
    });

    // tile
    auto tile = app.add_subcommand("tile", "perfect tilings");
    tile->require_subcommand(1);
    GraphSource host, pattern;
    int path_k = 1, clique_t = 0, t_max = 5;
    TilerConfig config;

    auto tile_exact = tile->add_subcommand("exact", "exact perfect F-tiling");
    add_source(tile_exact, host, "host", "host graph");
    add_source(tile_exact, pattern, "pattern", "pattern F");
    tile_exact->callback([&] {
        auto h = load(host, "host"), f = load(pattern, "pattern");
        auto r = perfect_tiling_exact(h, f, budget_from(nodes));
        json out{{"status", search_status_name(r.status)}, {"nodes", r.nodes}};
        if (r.value)
            out["tiling"] = tiling_to_json(*r.value);
        emit(out);
        result = exit_for(r.status);
    });

    auto tile_dense = tile->add_subcommand("dense", "perfect monotone P_k tiling by reserve, greedy and absorb");
    add_source(tile_dense, host, "host", "host graph");
    tile_dense->add_option("--k", path_k, "path length");
    tile_dense->add_option("--eta", config.eta, "reserve fraction");
    tile_dense->add_option("--zeta", config.zeta_fraction, "peeling fraction");
    tile_dense->add_option("--seed", config.seed, "seed for the reserve");
    tile_dense->callback([&] {
        auto h = load(host, "host");
        config.absorb_budget = budget_from(nodes);
        auto r = tile_dense_paths(h, path_k, config);
        json out{{"status", search_status_name(r.status)}, {"strategy", r.strategy}, {"reserved", r.reserved},
            {"greedy_pieces", r.greedy_pieces}, {"leftovers", r.leftovers}};
        if (r.tiling)
            out["tiling"] = tiling_to_json(*r.tiling);
        emit(out);
        result = exit_for(r.status);
    });

    auto tile_clique = tile->add_subcommand("clique", "strip copies, cover by K_T, tile each K_T");
    add_source(tile_clique, host, "host", "host graph");
    add_source(tile_clique, pattern, "pattern", "pattern F");
    tile_clique->add_option("--t", clique_t, "clique size T")->required();
    tile_clique->callback([&] {
        auto h = load(host, "host"), f = load(pattern, "pattern");
        auto r = tile_via_cliques(h, f, clique_t, budget_from(nodes));
        json out{{"status", search_status_name(r.status)}, {"degree_condition", r.degree_condition}, {"stripped", r.stripped},
            {"cliques", r.cliques}};
        if (! r.warning.empty())
            out["warning"] = r.warning;
        if (r.tiling)
            out["tiling"] = tiling_to_json(*r.tiling);
        emit(out);
        result = exit_for(r.status);
    });

    auto tile_number = tile->add_subcommand("number", "least t such that every ordering of K_t is F-tileable");
    add_source(tile_number, pattern, "pattern", "pattern F");
    tile_number->add_option("--t-max", t_max, "largest clique to enumerate");
    tile_number->callback([&] {
        auto f = load(pattern, "pattern");
        auto r = tiling_number(f, t_max, budget_from(nodes));
        json out{{"status", search_status_name(r.status)}, {"tileable", r.tileable}, {"sizes_checked", r.sizes_checked},
            {"classes_checked", r.classes_checked}};
        out["t"] = r.value ? json(*r.value) : json(nullptr);
        emit(out);
        result = exit_for(r.status);
    });

    // necessity
    auto necessity = app.add_subcommand("necessity", "witness scans over small edge-ordered graphs");
    necessity->require_subcommand(1);
    CatalogLimits limits;
    std::string target = "LargerDec x Min", subset;
    auto witness = necessity->add_subcommand("witness", "graph missing only the target star-canonical ordering");
    witness->add_option("--target", target, "star type");
    auto probe = necessity->add_subcommand("probe", "graph passing a subset of types yet failing another");
    probe->add_option("--types", subset, "';'-separated star types")->required();
    for (auto sub : {witness, probe}) {
        sub->add_option("--f-max", limits.f_max, "largest vertex count");
        sub->add_option("--edge-cap", limits.edge_cap, "largest edge count");
    }
    witness->callback([&] {
        auto r = necessity_witness(parse_star_type(target), limits, budget_from(nodes));
        json out{{"target", star_type_name(r.target)}, {"f_searched", r.f_searched}, {"edge_cap", r.edge_cap},
            {"scanned", r.scanned}, {"inconclusive", r.inconclusive}, {"refutation", r.refutation}, {"verified", verify_report(r)}};
        out["witness"] = r.witness ? graph_to_json(*r.witness) : json(nullptr);
        for (const auto & [t, e] : r.certificates)
            out["certificates"][star_type_name(t)] = embedding_to_json(e);
        emit(out);
        result = r.witness || r.inconclusive == 0 ? exit_decided : exit_inconclusive;
    });
    probe->callback([&] {
        auto r = sufficiency_probe(types_from(subset), limits, budget_from(nodes));
        json out{{"f_searched", r.f_searched}, {"edge_cap", r.edge_cap}, {"scanned", r.scanned}, {"inconclusive", r.inconclusive},
            {"verified", verify_report(r)}, {"subset", json::array()}};
        for (auto t : r.subset)
            out["subset"].push_back(star_type_name(t));
        out["counterexample"] = r.counterexample ? graph_to_json(*r.counterexample) : json(nullptr);
        if (r.failing)
            out["failing"] = star_type_name(*r.failing);
        emit(out);
        result = r.counterexample || r.inconclusive == 0 ? exit_decided : exit_inconclusive;
    });

    // experiment
    ExperimentSpec spec;
    std::vector<std::string> params;
    std::string out_path;
    auto experiment = app.add_subcommand("experiment", "seeded experiment with a JSON report");
    experiment->add_option("name", spec.name, "theorem1-grid, rodl-threshold, necessity-scan or catalog-verdicts")->required();
    experiment->add_option("--param,-p", params, "key=value, e.g. seed=42 or n=[8,12]");
    experiment->add_option("--out,-o", out_path, "write the report here instead of stdout");
    experiment->callback([&] {
        for (const auto & p : params)
            set_parameter(spec, p);
        auto report = run_experiment(spec).dump(2) + "\n";
        if (out_path.empty())
            std::cout << report;
        else {
            std::ofstream out(out_path, std::ios::binary);
            out << report;
        }
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_decided : exit_error;
    }
    catch (const Error & e) {
        std::cerr << "eotile: " << e.what() << '\n';
        return exit_error;
    }
    catch (const std::exception & e) {
        std::cerr << "eotile: internal error: " << e.what() << '\n';
        return exit_error;
    }
    return result;
}
