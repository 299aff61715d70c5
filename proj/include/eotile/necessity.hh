#ifndef EOTILE_NECESSITY_HH
#define EOTILE_NECESSITY_HH

#include <eotile/canonical.hh>
#include <eotile/embed.hh>
#include <eotile/graph.hh>

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace eotile {

/// Smaller Inc/Dec over Min and InvMin, Larger Inc/Dec over Max and InvMax.
auto known_necessary_types() -> const std::array<StarType, 8> &;

/// The four types that coincide with the canonical orderings.
auto canonical_coincident_types() -> const std::array<StarType, 4> &;

struct CatalogLimits {
    int f_max = 4;
    int edge_cap = 6;  // graphs with more edges are skipped
    std::uint64_t enumeration_budget = default_enumeration_budget;
};

/// One representative per order-isomorphism class of edge-ordered graphs on
/// 1..f_max vertices with at most edge_cap edges, sorted by (vertices,
/// edges, canonical code).
auto graph_catalog(const CatalogLimits & limits) -> std::vector<EdgeOrderedGraph>;

struct NecessityReport {
    StarType target;
    std::optional<EdgeOrderedGraph> witness;
    int f_searched = 0;
    int edge_cap = 0;
    std::map<StarType, Embedding> certificates;  // the nineteen other types
    bool refutation = false;                     // target proven to miss the witness
    std::size_t scanned = 0;
    std::size_t inconclusive = 0;                // graphs the budget left undecided
};

/// First catalog graph (three or more vertices) that embeds into every
/// star-canonical K_f except the target's.
auto necessity_witness(StarType target, const CatalogLimits & limits, const SearchBudget & budget = default_budget())
    -> NecessityReport;

struct SufficiencyReport {
    std::vector<StarType> subset;
    std::optional<EdgeOrderedGraph> counterexample;
    std::optional<StarType> failing;             // first omitted type it misses
    std::map<StarType, Embedding> certificates;  // embeddings into the subset types
    int f_searched = 0;
    int edge_cap = 0;
    std::size_t scanned = 0;
    std::size_t inconclusive = 0;

    /// No counterexample was found, so the subset suffices up to f_searched
    /// and edge_cap. Never a claim beyond that frontier.
    auto bounded_sufficient() const -> bool { return ! counterexample && inconclusive == 0; }
};

auto sufficiency_probe(const std::vector<StarType> & subset, const CatalogLimits & limits,
    const SearchBudget & budget = default_budget()) -> SufficiencyReport;

/// Re-checks every certificate and the failing-type claim against freshly
/// generated star-canonical cliques.
auto verify_report(const NecessityReport & report) -> bool;
auto verify_report(const SufficiencyReport & report) -> bool;

}

#endif
