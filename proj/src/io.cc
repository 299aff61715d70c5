#include <eotile/io.hh>

#include <cstdio>
#include <sstream>

namespace eotile {

using nlohmann::json;

namespace
{
    [[noreturn]] void schema_error(const std::string & what)
    {
        throw Error(ErrorCode::ParseError, what);
    }

    auto as_index(const json & value, const std::string & field) -> long long
    {
        if (! value.is_number_integer())
            schema_error("field '" + field + "' must be an integer");
        return value.get<long long>();
    }
}

auto graph_from_json(const json & doc) -> EdgeOrderedGraph
{
    if (! doc.is_object())
        schema_error("document must be an object");
    if (! doc.contains("n"))
        schema_error("missing field 'n'");
    if (! doc.contains("edges"))
        schema_error("missing field 'edges'");
    auto n = as_index(doc["n"], "n");
    if (n < 0 || n > 100000)
        schema_error("field 'n' out of range");
    const auto & edges = doc["edges"];
    if (! edges.is_array())
        schema_error("field 'edges' must be an array");

    std::vector<LabeledEdge> ranked;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto field = "edges[" + std::to_string(i) + "]";
        const auto & e = edges[i];
        if (! e.is_array() || e.size() != 3)
            schema_error("field '" + field + "' must be [u, v, rank]");
        auto u = as_index(e[0], field + "[0]"), v = as_index(e[1], field + "[1]"), r = as_index(e[2], field + "[2]");
        if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX)
            schema_error("field '" + field + "' endpoint out of range");
        ranked.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Label>(r)});
    }
    try {
        return build_graph(static_cast<int>(n), ranked);
    }
    catch (const Error & e) {
        throw Error(ErrorCode::ParseError, e.code(), e.what());
    }
}

auto parse_graph(std::string_view document) -> EdgeOrderedGraph
{
    json doc;
    try {
        doc = json::parse(document);
    }
    catch (const json::parse_error & e) {
        schema_error(e.what());
    }
    return graph_from_json(doc);
}

auto graph_to_json(const EdgeOrderedGraph & g) -> json
{
    json edges = json::array();
    for (Rank r = 1; r <= g.edge_count(); ++r)
        edges.push_back({g.edge_at(r).u, g.edge_at(r).v, r});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

auto serialize_graph(const EdgeOrderedGraph & g) -> std::string
{
    return graph_to_json(g).dump();
}

auto embedding_to_json(const Embedding & e) -> json
{
    return json(e.map);
}

auto tiling_to_json(const Tiling & t) -> json
{
    json pieces = json::array();
    for (const auto & p : t.pieces)
        pieces.push_back(embedding_to_json(p));
    return json{{"pieces", pieces}, {"covered", t.covered}};
}

auto export_dot(const EdgeOrderedGraph & g) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (Rank r = 1; r <= g.edge_count(); ++r)
        out << "  " << g.edge_at(r).u << " -- " << g.edge_at(r).v << " [label=\"" << r << "\"];\n";
    out << "}\n";
    return out.str();
}

auto fnv1a_hex(std::string_view bytes) -> std::string
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

auto graph_digest(const EdgeOrderedGraph & g) -> std::string
{
    return fnv1a_hex(serialize_graph(g));
}

}
