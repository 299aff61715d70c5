#ifndef EOTILE_CHARACTERIZE_HH
#define EOTILE_CHARACTERIZE_HH

#include <eotile/canonical.hh>
#include <eotile/embed.hh>
#include <eotile/graph.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eotile {

enum class Decision { Yes, No, Inconclusive };

auto decision_name(Decision d) -> const char *;

struct TuranVerdict {
    Decision decision = Decision::Yes;
    std::map<CanonicalType, Embedding> certificates;  // every type when Yes
    std::optional<CanonicalType> failing;             // first type without an embedding
    std::uint64_t nodes = 0;

    auto value() const -> bool { return decision == Decision::Yes; }
};

struct TileVerdict {
    Decision decision = Decision::Yes;
    std::map<StarType, Embedding> certificates;  // embeddings into star_canonical_clique(type, f)
    std::optional<StarType> failing;
    std::uint64_t nodes = 0;

    auto value() const -> bool { return decision == Decision::Yes; }
};

/// F embeds into all four canonical orderings of K_f. Checks run in the
/// order Min, Max, InvMin, InvMax and stop at the first proven failure.
auto is_turanable(const EdgeOrderedGraph & f, const SearchBudget & budget = default_budget()) -> TuranVerdict;

/// F embeds into all twenty star-canonical orderings of K_f, checked in
/// all_star_types() order.
auto is_tileable(const EdgeOrderedGraph & f, const SearchBudget & budget = default_budget()) -> TileVerdict;

/// Ranks are ignored: star forests, P_3 or K_3, plus isolated vertices.
auto is_universally_tileable(const EdgeOrderedGraph & h) -> bool;

struct ExtremalVertices {
    std::vector<Vertex> minimal;  // can play v_1 in a Min embedding
    std::vector<Vertex> maximal;  // can play v_f in a Max embedding
};

auto extremal_vertices(const EdgeOrderedGraph & f, const SearchBudget & budget = default_budget()) -> ExtremalVertices;

enum class PendantSide { Below, Above };

/// New vertex |F| joined to v by a new smallest (Below) or largest (Above)
/// edge. v must lie on the current smallest (resp. largest) edge.
auto add_pendant(const EdgeOrderedGraph & f, Vertex v, PendantSide side) -> EdgeOrderedGraph;

/// New vertex |F| joined to vmin by a new smallest edge and new vertex
/// |F| + 1 joined to vmax by a new largest edge.
auto add_two_pendants(const EdgeOrderedGraph & f, Vertex vmin, Vertex vmax, const SearchBudget & budget = default_budget())
    -> EdgeOrderedGraph;

/// D(n), Dplus(n), Dminus(n), MonoCycle(n), MonoPath(k), PathRanks(132) or
/// PathRanks(1,4,2,3), C4_1243.
auto family_graph(const std::string & descriptor) -> EdgeOrderedGraph;

/// Vertex u_i of D_n is vertex i - 1; the extra vertex of D_n^+/D_n^- is n.
auto d_graph(int n) -> EdgeOrderedGraph;
auto d_plus_graph(int n) -> EdgeOrderedGraph;
auto d_minus_graph(int n) -> EdgeOrderedGraph;
auto monotone_cycle(int n) -> EdgeOrderedGraph;
auto path_with_ranks(const std::vector<int> & ranks) -> EdgeOrderedGraph;
auto c4_1243() -> EdgeOrderedGraph;

struct FourColoring {
    std::vector<int> color;           // per vertex, in 0..3
    std::vector<Vertex> min_order;    // min_order[i] plays v_{i+1} in the Min embedding
    std::vector<Vertex> invmin_order; // same for InvMin
    std::vector<char> in_s, in_s_prime;
};

/// Colour classes: S, S' minus S, then a 2-colouring of the forest on the
/// remaining vertices. Throws std::logic_error if the result is improper.
auto turanable_four_coloring(const EdgeOrderedGraph & f, const SearchBudget & budget = default_budget()) -> FourColoring;

auto is_proper_coloring(const EdgeOrderedGraph & g, const std::vector<int> & color) -> bool;

}

#endif
