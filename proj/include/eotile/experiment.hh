#ifndef EOTILE_EXPERIMENT_HH
#define EOTILE_EXPERIMENT_HH

#include <eotile/graph.hh>
#include <eotile/random.hh>

#include <json.hpp>

#include <string>
#include <vector>

namespace eotile {

/// name plus parameters; "seed" is mandatory.
struct ExperimentSpec {
    std::string name;
    nlohmann::json parameters = nlohmann::json::object();
};

auto experiment_names() -> const std::vector<std::string> &;

/// Parses "key=value"; values that read as JSON keep their type, anything
/// else is a string.
void set_parameter(ExperimentSpec & spec, const std::string & assignment);

/// {spec, trials: [{input_digest, outcome, certificate_digest, wall_ms}],
/// summary}. wall_ms is null unless the parameter "timing" is true, so
/// untimed reports are byte-identical for identical specs.
auto run_experiment(const ExperimentSpec & spec) -> nlohmann::json;

/// Underlying G(n, p) redrawn until the minimum degree is reached, then a
/// uniformly random rank permutation.
auto random_host(int n, int min_degree, double p, Rng & rng) -> EdgeOrderedGraph;

/// Uniformly random n-vertex graph with exactly m edges and random ranks.
auto random_graph_with_edges(int n, int m, Rng & rng) -> EdgeOrderedGraph;

/// Uniformly random edge-ordering of h's underlying graph.
auto random_ordering(const EdgeOrderedGraph & h, Rng & rng) -> EdgeOrderedGraph;

}

#endif
