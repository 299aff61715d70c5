#ifndef EOTILE_TILING_HH
#define EOTILE_TILING_HH

#include <eotile/embed.hh>
#include <eotile/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eotile {

struct Tiling {
    std::vector<Embedding> pieces;
    std::vector<Vertex> covered;  // sorted

    auto is_perfect(const EdgeOrderedGraph & host) const -> bool
    {
        return static_cast<int>(covered.size()) == host.vertex_count();
    }
};

/// Pieces are embeddings of f, pairwise disjoint, and covered is their union.
auto verify_tiling(const EdgeOrderedGraph & host, const EdgeOrderedGraph & f, const Tiling & tiling) -> bool;

/// Exact cover over copies of f, branching on the lowest uncovered vertex.
/// Hosts are limited to 64 vertices.
auto perfect_tiling_exact(const EdgeOrderedGraph & host, const EdgeOrderedGraph & f, const SearchBudget & budget = default_budget())
    -> SearchResult<Tiling>;

struct TilingNumber {
    SearchStatus status = SearchStatus::Absent;  // Found: value holds T(F)
    std::optional<int> value;
    bool tileable = true;
    std::vector<int> sizes_checked;
    std::vector<std::size_t> classes_checked;  // iso-classes of K_t per checked size
};

/// Least t <= t_max divisible by |F| such that every edge-ordering of K_t has
/// a perfect F-tiling. Not tileable short-circuits to Absent.
auto tiling_number(const EdgeOrderedGraph & f, int t_max, const SearchBudget & budget = default_budget()) -> TilingNumber;

struct AbsorberSet {
    std::vector<Vertex> p_x, p_y;  // sorted, k vertices each
    Vertex w = -1;
    // Vertex sequences of the four spanning monotone paths:
    // {x} + P_x, {w} + P_x, {y} + P_y, {w} + P_y.
    std::vector<Vertex> path_x, path_wx, path_y, path_wy;

    auto vertices() const -> std::vector<Vertex>;
};

auto is_local_absorber(const EdgeOrderedGraph & g, Vertex x, Vertex y, int k, const AbsorberSet & a) -> bool;

/// Every (2k+1)-set A of V - {x, y}, in lexicographic order, that splits into
/// a local absorber for x and y; one witness split per set.
auto local_absorbers(const EdgeOrderedGraph & g, Vertex x, Vertex y, int k, std::size_t limit = SIZE_MAX)
    -> std::vector<AbsorberSet>;

/// True when ranks increase along the vertex sequence.
auto is_monotone_path(const EdgeOrderedGraph & g, const std::vector<Vertex> & path) -> bool;

struct TilerConfig {
    double eta = 0.25;
    double zeta_fraction = 0.25;
    SearchBudget absorb_budget = default_budget();
    std::uint64_t seed = 0;
};

struct DenseTilingResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Tiling> tiling;
    std::string strategy;  // "absorb" or "exact"
    std::size_t reserved = 0;
    std::size_t greedy_pieces = 0;
    std::size_t leftovers = 0;
};

/// Perfect monotone P_k-tiling: reserve a few disjoint monotone paths, tile
/// the rest greedily by smallest available rank, absorb leftovers into the
/// reserve by exact search, and fall back to exact search on the whole host.
auto tile_dense_paths(const EdgeOrderedGraph & g, int k, const TilerConfig & config = {}) -> DenseTilingResult;

struct CliqueTilingResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Tiling> tiling;
    bool degree_condition = true;
    std::string warning;
    std::size_t stripped = 0;
    std::vector<std::vector<Vertex>> cliques;
};

/// Strip copies of f until the remainder is divisible by t, cover the
/// remainder by t-cliques whose induced orderings f tiles, then tile each.
auto tile_via_cliques(const EdgeOrderedGraph & g, const EdgeOrderedGraph & f, int t, const SearchBudget & budget = default_budget())
    -> CliqueTilingResult;

enum class ExtremalKind { TwoCliques, Bipartite };

auto parse_extremal_kind(const std::string & s) -> ExtremalKind;

/// TwoCliques: vertices 0..a-1 and a..n-1 with a <= n - a as close to n/2 as
/// possible, neither divisible by k + 1; each min-ordered, ranks alternating
/// between the cliques. Bipartite: classes of round(gamma n) and the rest,
/// edges ranked lexicographically.
auto extremal_construction(ExtremalKind kind, int n, int k, double gamma = 0.25) -> EdgeOrderedGraph;

}

#endif
