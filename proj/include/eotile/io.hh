#ifndef EOTILE_IO_HH
#define EOTILE_IO_HH

#include <eotile/embed.hh>
#include <eotile/graph.hh>
#include <eotile/tiling.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace eotile {

/// {"n": count, "edges": [[u, v, rank], ...]}. Schema problems raise
/// ParseError naming the field; graph invariant violations raise
/// ParseError wrapping the build_graph code.
auto parse_graph(std::string_view document) -> EdgeOrderedGraph;
auto graph_from_json(const nlohmann::json & doc) -> EdgeOrderedGraph;

/// Edges sorted by rank; compact, stable bytes.
auto graph_to_json(const EdgeOrderedGraph & g) -> nlohmann::json;
auto serialize_graph(const EdgeOrderedGraph & g) -> std::string;

auto embedding_to_json(const Embedding & e) -> nlohmann::json;
auto tiling_to_json(const Tiling & t) -> nlohmann::json;

/// Graphviz text, vertices ascending, edges by rank, labelled with ranks.
auto export_dot(const EdgeOrderedGraph & g) -> std::string;

/// FNV-1a 64-bit, 16 lowercase hex digits.
auto fnv1a_hex(std::string_view bytes) -> std::string;

auto graph_digest(const EdgeOrderedGraph & g) -> std::string;

}

#endif
