#include <eotile/characterize.hh>
#include <eotile/experiment.hh>
#include <eotile/io.hh>
#include <eotile/necessity.hh>
#include <eotile/tiling.hh>

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace eotile {

using nlohmann::json;

auto experiment_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names{"theorem1-grid", "rodl-threshold", "necessity-scan", "catalog-verdicts"};
    return names;
}

void set_parameter(ExperimentSpec & spec, const std::string & assignment)
{
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error(ErrorCode::BadSpec, "parameter '" + assignment + "' must look like key=value");
    auto key = assignment.substr(0, eq), value = assignment.substr(eq + 1);
    auto parsed = json::parse(value, nullptr, false);
    spec.parameters[key] = parsed.is_discarded() ? json(value) : parsed;
}

auto random_ordering(const EdgeOrderedGraph & h, Rng & rng) -> EdgeOrderedGraph
{
    std::vector<Rank> ranks(h.edge_count());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        ranks[i] = static_cast<Rank>(i + 1);
    shuffle(ranks, rng);
    return with_ranks(h, ranks);
}

auto random_host(int n, int min_deg, double p, Rng & rng) -> EdgeOrderedGraph
{
    if (n < 1 || min_deg < 0 || min_deg > n - 1)
        throw Error(ErrorCode::BadSpec, "no " + std::to_string(n) + "-vertex graph has minimum degree " + std::to_string(min_deg));
    if (! (p > 0.0 && p <= 1.0))
        throw Error(ErrorCode::BadSpec, "edge probability must lie in (0, 1]");
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (uniform_unit(rng) < p)
                    edges.push_back({i, j});
        auto g = EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
        if (min_degree(g) >= min_deg)
            return random_ordering(g, rng);
    }
    throw Error(ErrorCode::BudgetExceeded, "rejection sampling found no host with the requested minimum degree");
}

auto random_graph_with_edges(int n, int m, Rng & rng) -> EdgeOrderedGraph
{
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.push_back({i, j});
    if (m < 0 || m > static_cast<int>(pairs.size()))
        throw Error(ErrorCode::BadSpec, "edge count out of range");
    shuffle(pairs, rng);
    pairs.resize(m);
    return EdgeOrderedGraph::from_sorted_edges(n, std::move(pairs));
}

namespace
{
    auto param_int(const ExperimentSpec & spec, const std::string & key, std::optional<long long> fallback = std::nullopt) -> long long
    {
        if (! spec.parameters.contains(key)) {
            if (fallback)
                return *fallback;
            throw Error(ErrorCode::BadSpec, "experiment " + spec.name + " needs parameter '" + key + "'");
        }
        const auto & v = spec.parameters[key];
        if (! v.is_number_integer())
            throw Error(ErrorCode::BadSpec, "parameter '" + key + "' must be an integer");
        return v.get<long long>();
    }

    auto param_double(const ExperimentSpec & spec, const std::string & key, double fallback) -> double
    {
        if (! spec.parameters.contains(key))
            return fallback;
        const auto & v = spec.parameters[key];
        if (! v.is_number())
            throw Error(ErrorCode::BadSpec, "parameter '" + key + "' must be a number");
        return v.get<double>();
    }

    auto param_ints(const ExperimentSpec & spec, const std::string & key) -> std::vector<int>
    {
        if (! spec.parameters.contains(key))
            throw Error(ErrorCode::BadSpec, "experiment " + spec.name + " needs parameter '" + key + "'");
        const auto & v = spec.parameters[key];
        std::vector<int> out;
        if (v.is_number_integer())
            out.push_back(v.get<int>());
        else if (v.is_array()) {
            for (const auto & x : v) {
                if (! x.is_number_integer())
                    throw Error(ErrorCode::BadSpec, "parameter '" + key + "' must hold integers");
                out.push_back(x.get<int>());
            }
        }
        else
            throw Error(ErrorCode::BadSpec, "parameter '" + key + "' must be an integer or a list");
        return out;
    }

    auto seed_of(const ExperimentSpec & spec) -> std::uint64_t
    {
        if (! spec.parameters.contains("seed") || ! spec.parameters["seed"].is_number_unsigned())
            throw Error(ErrorCode::BadSpec, "experiment needs a non-negative integer 'seed'");
        return spec.parameters["seed"].get<std::uint64_t>();
    }

    auto digest(const json & j) -> std::string
    {
        return fnv1a_hex(j.dump());
    }

    class TrialLog {
    public:
        explicit TrialLog(bool timing) : _timing(timing) {}

        void run(const std::function<json()> & trial)
        {
            auto start = std::chrono::steady_clock::now();
            auto entry = trial();
            if (_timing)
                entry["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            else
                entry["wall_ms"] = nullptr;
            _trials.push_back(std::move(entry));
        }

        auto trials() -> json & { return _trials; }

    private:
        bool _timing;
        json _trials = json::array();
    };

    void ensure(bool ok, const std::string & what)
    {
        if (! ok)
            throw std::logic_error("unverified result withheld from report: " + what);
    }

    auto theorem1_grid(const ExperimentSpec & spec, TrialLog & log) -> json
    {
        auto seed = seed_of(spec);
        auto ns = param_ints(spec, "n"), ks = param_ints(spec, "k");
        auto trials = param_int(spec, "trials", 50);
        double eta = param_double(spec, "eta", 0.25);
        double zeta = param_double(spec, "zeta_fraction", 0.25);
        std::uint64_t trial_index = 0;

        json cells = json::array();
        for (int k : ks)
            for (int n : ns) {
                json cell{{"n", n}, {"k", k}};
                if (k < 1 || n < 2 || n % (k + 1) != 0) {
                    cell["status"] = "not-applicable";
                    cell["reason"] = std::to_string(k + 1) + " does not divide " + std::to_string(n);
                    cells.push_back(cell);
                    continue;
                }
                int min_deg = static_cast<int>(param_int(spec, "min_degree", static_cast<long long>(std::ceil((0.5 + eta) * n))));
                double p = param_double(spec, "p", (1.0 + static_cast<double>(min_deg) / (n - 1)) / 2.0);
                cell["min_degree"] = min_deg;

                long long tiled = 0;
                json strategies = json::object();
                for (long long t = 0; t < trials; ++t, ++trial_index) {
                    log.run([&] {
                        Rng rng(derive_seed(seed, trial_index));
                        auto host = random_host(n, min_deg, p, rng);
                        TilerConfig config;
                        config.eta = eta;
                        config.zeta_fraction = zeta;
                        config.seed = derive_seed(seed ^ 0x5bd1e995ULL, trial_index);
                        auto result = tile_dense_paths(host, k, config);
                        json entry{{"n", n}, {"k", k}, {"input_digest", graph_digest(host)}};
                        if (result.tiling) {
                            ensure(result.tiling->is_perfect(host) && verify_tiling(host, monotone_path(k), *result.tiling), "dense tiling");
                            entry["outcome"] = "tiled:" + result.strategy;
                            entry["certificate_digest"] = digest(tiling_to_json(*result.tiling));
                            ++tiled;
                            strategies[result.strategy] = strategies.value(result.strategy, 0) + 1;
                        }
                        else {
                            entry["outcome"] = std::string("no-tiling:") + search_status_name(result.status);
                            entry["certificate_digest"] = nullptr;
                        }
                        return entry;
                    });
                }
                cell["trials"] = trials;
                cell["tiled"] = tiled;
                cell["strategies"] = strategies;

                try {
                    auto g0 = extremal_construction(ExtremalKind::TwoCliques, n, k);
                    auto refuted = perfect_tiling_exact(g0, monotone_path(k));
                    cell["extremal"] = json{{"digest", graph_digest(g0)}, {"min_degree", min_degree(g0)},
                        {"exact", search_status_name(refuted.status)}, {"refuted", refuted.absent()}};
                }
                catch (const Error & e) {
                    cell["extremal"] = json{{"error", e.what()}};
                }
                cells.push_back(cell);
            }
        return json{{"cells", cells}};
    }

    auto rodl_threshold(const ExperimentSpec & spec, TrialLog & log) -> json
    {
        auto seed = seed_of(spec);
        int n = static_cast<int>(param_int(spec, "n"));
        int k = static_cast<int>(param_int(spec, "k"));
        auto trials = param_int(spec, "trials", 100);
        int edges = static_cast<int>(param_int(spec, "edges", static_cast<long long>(k) * (k + 1) * n / 2));
        long long found = 0;
        for (long long t = 0; t < trials; ++t) {
            log.run([&] {
                Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
                auto host = random_ordering(random_graph_with_edges(n, edges, rng), rng);
                auto path = find_monotone_path(host, k);
                json entry{{"input_digest", graph_digest(host)}};
                if (path) {
                    ensure(static_cast<int>(path->size()) == k + 1 && is_monotone_path(host, *path), "monotone path");
                    entry["outcome"] = "found";
                    entry["certificate_digest"] = digest(json(*path));
                    ++found;
                }
                else {
                    entry["outcome"] = "absent";
                    entry["certificate_digest"] = nullptr;
                }
                return entry;
            });
        }
        return json{{"n", n}, {"k", k}, {"edges", edges}, {"trials", trials}, {"found", found}};
    }

    auto limits_of(const ExperimentSpec & spec) -> CatalogLimits
    {
        CatalogLimits limits;
        limits.f_max = static_cast<int>(param_int(spec, "f_max", 4));
        limits.edge_cap = static_cast<int>(param_int(spec, "edge_cap", limits.f_max * (limits.f_max - 1) / 2));
        return limits;
    }

    auto certificates_json(const auto & certs, auto name) -> json
    {
        json out = json::object();
        for (const auto & [type, e] : certs)
            out[name(type)] = embedding_to_json(e);
        return out;
    }

    auto necessity_scan(const ExperimentSpec & spec, TrialLog & log) -> json
    {
        seed_of(spec);
        auto limits = limits_of(spec);
        json witnessed = json::array();
        for (auto type : all_star_types()) {
            log.run([&] {
                auto report = necessity_witness(type, limits);
                ensure(verify_report(report), "necessity report for " + star_type_name(type));
                json entry{{"input_digest", fnv1a_hex(star_type_name(type))}, {"target", star_type_name(type)}};
                if (report.witness) {
                    entry["outcome"] = "witness";
                    entry["witness"] = graph_to_json(*report.witness);
                    entry["certificate_digest"] = digest(json{{"witness", graph_to_json(*report.witness)},
                        {"certificates", certificates_json(report.certificates, star_type_name)}});
                    witnessed.push_back(star_type_name(type));
                }
                else {
                    entry["outcome"] = report.inconclusive ? "none-inconclusive" : "none";
                    entry["certificate_digest"] = nullptr;
                }
                entry["scanned"] = report.scanned;
                return entry;
            });
        }

        std::vector<StarType> coincident(canonical_coincident_types().begin(), canonical_coincident_types().end());
        auto probe = sufficiency_probe(coincident, limits);
        ensure(verify_report(probe), "sufficiency probe");
        json probe_json{{"subset", json::array()}, {"scanned", probe.scanned}, {"inconclusive", probe.inconclusive}};
        for (auto t : probe.subset)
            probe_json["subset"].push_back(star_type_name(t));
        if (probe.counterexample) {
            probe_json["counterexample"] = graph_to_json(*probe.counterexample);
            probe_json["failing"] = star_type_name(*probe.failing);
        }
        else
            probe_json["counterexample"] = nullptr;

        return json{{"f_max", limits.f_max}, {"edge_cap", limits.edge_cap}, {"witnessed", witnessed}, {"canonical_probe", probe_json}};
    }

    auto catalog_verdicts(const ExperimentSpec & spec, TrialLog & log) -> json
    {
        seed_of(spec);
        auto limits = limits_of(spec);
        long long turanable = 0, tileable = 0, graphs = 0;
        int max_chi = 0;
        for (const auto & g : graph_catalog(limits)) {
            log.run([&] {
                auto t = is_turanable(g);
                auto s = is_tileable(g);
                for (const auto & [type, e] : t.certificates)
                    ensure(is_embedding(g, canonical_clique(type, g.vertex_count()), e), "Turán certificate");
                for (const auto & [type, e] : s.certificates)
                    ensure(is_embedding(g, star_canonical_clique(type, g.vertex_count()).graph, e), "tiling certificate");
                json entry{{"input_digest", graph_digest(g)}, {"graph", to_string(g)}};
                entry["outcome"] = std::string("turanable=") + decision_name(t.decision) + ";tileable=" + decision_name(s.decision);
                json cert{{"turan", certificates_json(t.certificates, canonical_type_name)},
                    {"tile", certificates_json(s.certificates, star_type_name)}};
                if (t.failing)
                    cert["turan_failing"] = canonical_type_name(*t.failing);
                if (s.failing)
                    cert["tile_failing"] = star_type_name(*s.failing);
                entry["certificate_digest"] = digest(cert);
                ++graphs;
                turanable += t.value();
                tileable += s.value();
                if (t.value())
                    max_chi = std::max(max_chi, chromatic_number(g));
                return entry;
            });
        }
        return json{{"f_max", limits.f_max}, {"edge_cap", limits.edge_cap}, {"graphs", graphs}, {"turanable", turanable},
            {"tileable", tileable}, {"max_chromatic_turanable", max_chi}};
    }
}

auto run_experiment(const ExperimentSpec & spec) -> json
{
    bool timing = spec.parameters.contains("timing") && spec.parameters["timing"] == true;
    TrialLog log(timing);
    json summary;
    if (spec.name == "theorem1-grid")
        summary = theorem1_grid(spec, log);
    else if (spec.name == "rodl-threshold")
        summary = rodl_threshold(spec, log);
    else if (spec.name == "necessity-scan")
        summary = necessity_scan(spec, log);
    else if (spec.name == "catalog-verdicts")
        summary = catalog_verdicts(spec, log);
    else
        throw Error(ErrorCode::UnknownExperiment, "'" + spec.name + "'");
    return json{{"spec", {{"name", spec.name}, {"parameters", spec.parameters}}}, {"trials", std::move(log.trials())}, {"summary", summary}};
}

}
