#ifndef EOTILE_GRAPH_HH
#define EOTILE_GRAPH_HH

#include <eotile/error.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eotile {

using Vertex = int;
using Rank = int;
using Label = std::int64_t;

struct Edge {
    Vertex u, v;  // u < v

    auto operator<=>(const Edge &) const = default;
};

struct LabeledEdge {
    Vertex u, v;
    Label label;
};

struct Incidence {
    Rank rank;
    Vertex other;
};

/**
 * A simple graph on vertices 0..n-1 with a total order on its edges, stored as
 * dense ranks 1..m. Edge with rank r lives at edges()[r - 1]. Immutable once
 * built; every constructor path goes through rank normalization.
 */
class EdgeOrderedGraph {
public:
    EdgeOrderedGraph() = default;

    /// Builds from edges already listed in increasing order. Endpoints are
    /// validated, the listing order becomes the rank order.
    static auto from_sorted_edges(int n, std::vector<Edge> edges) -> EdgeOrderedGraph;

    auto vertex_count() const -> int { return _n; }
    auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto edge_at(Rank r) const -> Edge { return _edges[r - 1]; }

    /// 0 when u and v are not adjacent.
    auto rank(Vertex u, Vertex v) const -> Rank { return _rank[u * _n + v]; }
    auto has_edge(Vertex u, Vertex v) const -> bool { return u != v && rank(u, v) != 0; }

    /// Incident edges of u sorted by increasing rank.
    auto incident(Vertex u) const -> const std::vector<Incidence> & { return _incident[u]; }
    auto degree(Vertex u) const -> int { return static_cast<int>(_incident[u].size()); }

    auto operator==(const EdgeOrderedGraph & other) const -> bool
    {
        return _n == other._n && _edges == other._edges;
    }

private:
    int _n = 0;
    std::vector<Edge> _edges;
    std::vector<Rank> _rank;
    std::vector<std::vector<Incidence>> _incident;
};

/// Order-isomorphism witness: vertex_map[u] is the image of u.
struct IsoCertificate {
    std::vector<Vertex> vertex_map;

    auto operator==(const IsoCertificate &) const -> bool = default;
};

struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode &) const = default;
    auto hex() const -> std::string;
};

auto build_graph(int n, std::span<const LabeledEdge> ranked_edges) -> EdgeOrderedGraph;
auto build_graph(int n, std::initializer_list<LabeledEdge> ranked_edges) -> EdgeOrderedGraph;

auto reverse(const EdgeOrderedGraph & g) -> EdgeOrderedGraph;

/// Vertices of s are relabelled 0..|s|-1 in increasing original order.
auto induced_subgraph(const EdgeOrderedGraph & g, std::span<const Vertex> s) -> EdgeOrderedGraph;

/// Returns the lexicographically least bijection preserving edges and edge
/// order, if one exists.
auto are_order_isomorphic(const EdgeOrderedGraph & f, const EdgeOrderedGraph & g) -> std::optional<IsoCertificate>;

auto canonical_code(const EdgeOrderedGraph & g) -> CanonicalCode;

/// The graph with vertex u renamed to perm[u].
auto relabel(const EdgeOrderedGraph & g, std::span<const Vertex> perm) -> EdgeOrderedGraph;

/// Same underlying graph, edges ordered by ranks[i] for the i-th edge of g.
auto with_ranks(const EdgeOrderedGraph & g, std::span<const Rank> ranks) -> EdgeOrderedGraph;

inline constexpr std::uint64_t default_enumeration_budget = 4'000'000;

/// One representative per order-isomorphism class of edge-orderings of the
/// underlying graph of h, in ascending canonical code order. Throws
/// BudgetExceeded when m! exceeds the budget.
auto enumerate_orderings(const EdgeOrderedGraph & h, std::uint64_t budget = default_enumeration_budget)
    -> std::vector<EdgeOrderedGraph>;

/// Exact chromatic number of the underlying graph; BudgetExceeded beyond 24 vertices.
auto chromatic_number(const EdgeOrderedGraph & g) -> int;

auto complete_graph(int n) -> EdgeOrderedGraph;
auto is_complete(const EdgeOrderedGraph & g) -> bool;
auto min_degree(const EdgeOrderedGraph & g) -> int;
auto isolated_vertices(const EdgeOrderedGraph & g) -> std::vector<Vertex>;

/// Stable, human-readable one-line form: "n:u-v,u-v,..." in rank order.
auto to_string(const EdgeOrderedGraph & g) -> std::string;

}

#endif
