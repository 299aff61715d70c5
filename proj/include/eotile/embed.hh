#ifndef EOTILE_EMBED_HH
#define EOTILE_EMBED_HH

#include <eotile/canonical.hh>
#include <eotile/graph.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace eotile {

/// Caps on a single search. A zero time limit means no wall-clock cap, which
/// keeps results reproducible; node limits are deterministic.
struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;
    std::chrono::milliseconds time_limit{0};
};

/// The default budget, overridable through EOTILE_NODE_BUDGET.
auto default_budget() -> SearchBudget;

/// map[u] is the host vertex playing pattern vertex u.
struct Embedding {
    std::vector<Vertex> map;

    auto operator==(const Embedding &) const -> bool = default;
};

/// Injective, edge-preserving and order-preserving.
auto is_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const Embedding & e) -> bool;

struct EmbeddingConstraints {
    std::vector<Vertex> forced;  // per pattern vertex; -1 leaves it free. Empty: no forcing.
    std::vector<char> allowed;   // per host vertex; 0 forbids it. Empty: everything allowed.
};

enum class Visit { Continue, Stop };

struct EnumerationStats {
    bool complete = true;  // false when the budget cut the search short
    bool stopped = false;  // the visitor asked to stop
    std::uint64_t nodes = 0;
    std::uint64_t visited = 0;
};

/// Visits every embedding of f into h satisfying the constraints, in a fixed
/// deterministic order: pattern edges are placed in rank order onto host edges
/// of increasing rank.
auto for_each_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const EmbeddingConstraints & constraints,
    const SearchBudget & budget, const std::function<Visit(const Embedding &)> & visit) -> EnumerationStats;

auto find_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget = default_budget(),
    const EmbeddingConstraints & constraints = {}) -> SearchResult<Embedding>;

/// Number of embeddings (injective maps), not copies.
auto count_embeddings(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget = default_budget())
    -> std::uint64_t;

/// Order-preserving automorphisms of f.
auto automorphism_count(const EdgeOrderedGraph & f) -> std::uint64_t;

/// Number of subgraphs of h order-isomorphic to f; BudgetExceeded if the
/// enumeration does not finish.
auto count_copies(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget = default_budget())
    -> std::uint64_t;

/// The monotone path on k edges, vertices 0..k, edge i(i+1) of rank i + 1.
auto monotone_path(int k) -> EdgeOrderedGraph;

struct MonotonePathOptions {
    double zeta_fraction = 0.25;  // share of the max degree peeled per vertex
    bool use_peeling = true;
};

/// Vertex sequence of a monotone path on k edges (ranks increase along it),
/// or nullopt when h has none. Tries degree peeling first, then exhaustive
/// search, so the answer is exact.
auto find_monotone_path(const EdgeOrderedGraph & h, int k, const MonotonePathOptions & options = {})
    -> std::optional<std::vector<Vertex>>;

/// Peeling heuristic alone; may miss paths the exhaustive search finds.
auto find_monotone_path_by_peeling(const EdgeOrderedGraph & h, int k, double zeta_fraction = 0.25)
    -> std::optional<std::vector<Vertex>>;

struct MonotoneSubsequence {
    std::vector<Vertex> vertices;
    bool increasing = true;
};

/// Longest run of neighbours of x, in increasing vertex order, whose edges to
/// x have monotone ranks. Ties prefer the increasing run.
auto monotone_star_subsequence(const EdgeOrderedGraph & h, Vertex x) -> MonotoneSubsequence;

enum class StarColor { B, M, S };

auto star_color_name(StarColor c) -> const char *;

auto star_edge_coloring(const EdgeOrderedGraph & h, Vertex x, Vertex vi, Vertex vj) -> StarColor;

struct StarSubclique {
    StarType type;
    Embedding embedding;  // from star_canonical_clique(type, f), special vertex 0 onto x
};

/// A star-canonically ordered K_f inside the complete graph h with x as its
/// special vertex, found by direct search over the twenty types.
auto find_star_canonical_subclique(const EdgeOrderedGraph & h, Vertex x, int f, const SearchBudget & budget = default_budget())
    -> SearchResult<StarSubclique>;

}

#endif
