#ifndef EOTILE_CANONICAL_HH
#define EOTILE_CANONICAL_HH

#include <eotile/graph.hh>

#include <array>
#include <string>
#include <vector>

namespace eotile {

/// The four canonical orderings of K_n, in the fixed check order.
enum class CanonicalType { Min, Max, InvMin, InvMax };

/// Where the special vertex's edges sit relative to the canonical part.
enum class StarFamily { LargerInc, LargerDec, SmallerInc, SmallerDec, MiddleInc };

struct StarType {
    StarFamily family;
    CanonicalType part;

    auto operator<=>(const StarType &) const = default;
};

inline constexpr std::array<CanonicalType, 4> all_canonical_types{
    CanonicalType::Min, CanonicalType::Max, CanonicalType::InvMin, CanonicalType::InvMax};

inline constexpr std::array<StarFamily, 5> all_star_families{
    StarFamily::LargerInc, StarFamily::LargerDec, StarFamily::SmallerInc, StarFamily::SmallerDec, StarFamily::MiddleInc};

/// All twenty types, canonical part major: (Min: LI, LD, SI, SD, MI), (Max: ...), ...
auto all_star_types() -> const std::array<StarType, 20> &;

auto canonical_type_name(CanonicalType t) -> std::string;
auto star_family_name(StarFamily f) -> std::string;
/// e.g. "LargerDec x Min"
auto star_type_name(StarType s) -> std::string;
auto parse_canonical_type(const std::string & s) -> CanonicalType;
/// Accepts "LargerDec x Min", "LargerDec*Min", "LargerDec:Min".
auto parse_star_type(const std::string & s) -> StarType;

/// Standard labels L1..L4 of v_i v_j (1-based, i < j) in K_n.
auto canonical_label(CanonicalType t, int n, int i, int j) -> Label;

/// Raw labelled edges of the canonical K_n; vertex i - 1 plays v_i.
auto canonical_labels(CanonicalType t, int n) -> std::vector<LabeledEdge>;

auto canonical_clique(CanonicalType t, int n) -> EdgeOrderedGraph;

/// Raw label of x v_i for a star clique whose canonical part has n vertices.
auto star_label(StarType s, int n, int i) -> Label;

/// Raw labelled edges of the star-canonical K_{n+1}: vertex 0 is the special
/// vertex x and vertex i plays v_i.
auto star_canonical_labels(StarType s, int size) -> std::vector<LabeledEdge>;

struct StarClique {
    EdgeOrderedGraph graph;
    Vertex special;
};

auto star_canonical_clique(StarType s, int size) -> StarClique;

struct StarClassification {
    StarType type;
    Vertex special;
    std::vector<Vertex> order;  // order[i - 1] plays v_i

    auto operator==(const StarClassification &) const -> bool = default;
};

/// Every (type, x, vertex order) under which the complete graph g is
/// star-canonically ordered, in type order. Empty below three vertices.
auto classify_star_canonical(const EdgeOrderedGraph & g) -> std::vector<StarClassification>;

/// A spanning cycle of star_canonical_clique(s, size) whose ranks increase
/// along the traversal; starts at the smallest edge, so the closing edge
/// back to the first vertex is the largest.
auto monotone_hamilton_cycle(StarType s, int size) -> std::vector<Vertex>;

/// True when ranks strictly increase along cycle[0]cycle[1], ..., cycle[last]cycle[0].
auto is_increasing_cycle(const EdgeOrderedGraph & g, const std::vector<Vertex> & cycle) -> bool;

}

#endif
