#include <doctest.h>

#include <eotile/canonical.hh>
#include <eotile/characterize.hh>
#include <eotile/io.hh>

#include "support/oracles.hh"

using namespace eotile;

namespace {

auto parse_error_of(std::string_view doc) -> std::optional<Error>
{
    try {
        parse_graph(doc);
    }
    catch (const Error & e) {
        return e;
    }
    return std::nullopt;
}

}

TEST_CASE("parse_graph examples")
{
    auto g = parse_graph(R"({"n":3,"edges":[[0,1,1],[1,2,2]]})");
    CHECK(g == monotone_path(2));

    auto e = parse_error_of(R"({"n":2,"edges":[[0,1,1],[0,1,2]]})");
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::ParseError);
    REQUIRE(e->cause());
    CHECK(*e->cause() == ErrorCode::DuplicateEdge);
    CHECK(std::string(e->what()).starts_with("ParseError(DuplicateEdge)"));

    auto min4 = canonical_clique(CanonicalType::Min, 4);
    auto bytes = serialize_graph(min4);
    CHECK(bytes == R"({"edges":[[0,1,1],[0,2,2],[0,3,3],[1,2,4],[1,3,5],[2,3,6]],"n":4})");
    CHECK(serialize_graph(min4) == bytes);
}

TEST_CASE("parse_graph schema errors name the field")
{
    struct Case {
        const char * doc;
        const char * field;
    };
    for (auto c : {Case{R"({"edges":[]})", "'n'"}, Case{R"({"n":2})", "'edges'"}, Case{R"({"n":"2","edges":[]})", "'n'"},
             Case{R"({"n":3,"edges":[[0,1]]})", "edges[0]"}, Case{R"({"n":3,"edges":[[0,1,1],[1,"x",2]]})", "edges[1][1]"},
             Case{R"([1,2])", "object"}}) {
        auto e = parse_error_of(c.doc);
        REQUIRE(e);
        CHECK(e->code() == ErrorCode::ParseError);
        CHECK_FALSE(e->cause());
        CHECK_MESSAGE(std::string(e->what()).find(c.field) != std::string::npos, e->what());
    }
    auto bad = parse_error_of("{\"n\":3,\n\"edges\":[");
    REQUIRE(bad);
    CHECK(bad->code() == ErrorCode::ParseError);
    CHECK(std::string(bad->what()).find("line 2") != std::string::npos);

    auto range = parse_error_of(R"({"n":2,"edges":[[0,5,1]]})");
    REQUIRE(range);
    CHECK(*range->cause() == ErrorCode::BadVertex);
    auto collide = parse_error_of(R"({"n":3,"edges":[[0,1,1],[1,2,1]]})");
    REQUIRE(collide);
    CHECK(*collide->cause() == ErrorCode::RankCollision);
}

TEST_CASE("property: serialization round-trips over the catalog")
{
    for (const auto & g : oracle::catalog(4)) {
        CHECK(parse_graph(serialize_graph(g)) == g);
        CHECK(graph_digest(g) == graph_digest(parse_graph(serialize_graph(g))));
    }
    auto raw = parse_graph(R"({"n":3,"edges":[[1,2,90],[0,1,-4]]})");
    CHECK(serialize_graph(raw) == R"({"edges":[[0,1,1],[1,2,2]],"n":3})");
}

TEST_CASE("export_dot examples")
{
    CHECK(export_dot(monotone_path(1)) == "graph G {\n  0;\n  1;\n  0 -- 1 [label=\"1\"];\n}\n");

    auto k3 = export_dot(canonical_clique(CanonicalType::Min, 3));
    CHECK(k3 == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1 [label=\"1\"];\n  0 -- 2 [label=\"2\"];\n  1 -- 2 [label=\"3\"];\n}\n");

    CHECK(export_dot(EdgeOrderedGraph{}) == "graph G {\n}\n");
}

TEST_CASE("digests")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(graph_digest(monotone_path(2)) == fnv1a_hex(R"({"edges":[[0,1,1],[1,2,2]],"n":3})"));
}

TEST_CASE("tiling and embedding json")
{
    Tiling t{{Embedding{{0, 1}}, Embedding{{3, 2}}}, {0, 1, 2, 3}};
    CHECK(tiling_to_json(t).dump() == R"({"covered":[0,1,2,3],"pieces":[[0,1],[3,2]]})");
    CHECK(embedding_to_json(Embedding{{2, 0, 1}}).dump() == "[2,0,1]");
}
