#include <doctest.h>

#include <eotile/canonical.hh>
#include <eotile/characterize.hh>
#include <eotile/embed.hh>

#include "support/oracles.hh"

#include <algorithm>
#include <set>

using namespace eotile;

namespace {

auto expect_error(ErrorCode code, auto && fn)
{
    try {
        fn();
        FAIL("expected " << error_code_name(code));
    }
    catch (const Error & e) {
        CHECK(e.code() == code);
    }
}

auto underlying_graphs(int n) -> std::vector<EdgeOrderedGraph>
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.push_back({i, j});
    std::vector<EdgeOrderedGraph> out;
    for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (s >> i & 1)
                es.push_back({pairs[i].first, pairs[i].second});
        out.push_back(EdgeOrderedGraph::from_sorted_edges(n, es));
    }
    return out;
}

void check_turan_certificates(const EdgeOrderedGraph & f, const TuranVerdict & v)
{
    for (const auto & [t, e] : v.certificates)
        CHECK(oracle::is_embedding(f, canonical_clique(t, std::max(f.vertex_count(), 2)), e.map));
}

void check_tile_certificates(const EdgeOrderedGraph & f, const TileVerdict & v)
{
    for (const auto & [s, e] : v.certificates)
        CHECK(oracle::is_embedding(f, star_canonical_clique(s, f.vertex_count()).graph, e.map));
}

}

TEST_CASE("is_turanable examples")
{
    auto d4 = is_turanable(d_graph(4));
    CHECK(d4.value());
    CHECK(d4.certificates.size() == 4);
    check_turan_certificates(d_graph(4), d4);

    auto c4 = is_turanable(monotone_cycle(4));
    CHECK(c4.decision == Decision::No);
    REQUIRE(c4.failing);
    CHECK(*c4.failing == CanonicalType::Min);

    CHECK_FALSE(is_turanable(path_with_ranks({1, 4, 2, 3})).value());
    CHECK_FALSE(is_turanable(path_with_ranks({2, 3, 1, 4})).value());
    CHECK_FALSE(oracle::turanable(path_with_ranks({1, 4, 2, 3})));
}

TEST_CASE("is_tileable examples")
{
    auto d4 = is_tileable(d_graph(4));
    CHECK(d4.decision == Decision::No);
    REQUIRE(d4.failing);
    CHECK(*d4.failing == StarType{StarFamily::LargerDec, CanonicalType::Min});

    auto c5 = is_tileable(monotone_cycle(5));
    CHECK(c5.value());
    CHECK(c5.certificates.size() == 20);
    check_tile_certificates(monotone_cycle(5), c5);

    auto p3 = is_tileable(path_with_ranks({1, 2, 3}));
    CHECK(p3.value());
    check_tile_certificates(path_with_ranks({1, 2, 3}), p3);
}

TEST_CASE("trivial graphs are tileable")
{
    CHECK(is_tileable(EdgeOrderedGraph::from_sorted_edges(1, {})).value());
    CHECK(is_tileable(EdgeOrderedGraph::from_sorted_edges(4, {})).value());
    CHECK(is_tileable(monotone_path(1)).value());
    CHECK(is_turanable(EdgeOrderedGraph::from_sorted_edges(3, {})).value());
}

TEST_CASE("inconclusive budgets never turn into refutations")
{
    SearchBudget tiny{2, std::chrono::milliseconds{0}};
    auto v = is_tileable(monotone_cycle(7), tiny);
    CHECK(v.decision == Decision::Inconclusive);
    CHECK_FALSE(v.failing);
}

TEST_CASE("is_universally_tileable examples")
{
    CHECK(is_universally_tileable(build_graph(5, {{0, 1, 1}, {0, 2, 2}, {3, 4, 3}})));
    CHECK_FALSE(is_universally_tileable(monotone_cycle(4)));
    CHECK(is_universally_tileable(build_graph(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}})));
    CHECK(is_universally_tileable(path_with_ranks({1, 2, 3})));
    CHECK_FALSE(is_universally_tileable(path_with_ranks({1, 2, 3, 4})));
}

TEST_CASE("property: universal tileability matches every ordering being tileable up to 4 vertices")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto & h : underlying_graphs(n)) {
            bool all = true;
            for (const auto & g : enumerate_orderings(h))
                all = all && is_tileable(g).value();
            CHECK_MESSAGE(is_universally_tileable(h) == all, to_string(h));
        }
}

TEST_CASE("extremal_vertices examples")
{
    auto p = extremal_vertices(monotone_path(3));
    CHECK(std::find(p.minimal.begin(), p.minimal.end(), 0) != p.minimal.end());
    CHECK(std::find(p.minimal.begin(), p.minimal.end(), 1) != p.minimal.end());

    // Frozen from brute-force Min and Max embeddings of D_4 into K_4.
    std::set<Vertex> mins, maxs;
    auto d4 = d_graph(4);
    for (const auto & m : oracle::embeddings(d4, canonical_clique(CanonicalType::Min, 4)))
        for (Vertex v = 0; v < 4; ++v)
            if (m[v] == 0)
                mins.insert(v);
    for (const auto & m : oracle::embeddings(d4, canonical_clique(CanonicalType::Max, 4)))
        for (Vertex v = 0; v < 4; ++v)
            if (m[v] == 3)
                maxs.insert(v);
    CHECK(mins == std::set<Vertex>{0});
    CHECK(maxs == std::set<Vertex>{3});
    auto ev = extremal_vertices(d4);
    CHECK(ev.minimal == std::vector<Vertex>{0});
    CHECK(ev.maximal == std::vector<Vertex>{3});

    auto e = extremal_vertices(monotone_path(1));
    CHECK(e.minimal == std::vector<Vertex>{0, 1});
    CHECK(e.maximal == std::vector<Vertex>{0, 1});

    expect_error(ErrorCode::NotTuranable, [] { extremal_vertices(monotone_cycle(4)); });
}

TEST_CASE("property: every Turanable catalog graph has minimal and maximal vertices")
{
    for (const auto & g : oracle::catalog(4)) {
        if (g.edge_count() == 0 || ! is_turanable(g).value())
            continue;
        auto ev = extremal_vertices(g);
        CHECK_FALSE(ev.minimal.empty());
        CHECK_FALSE(ev.maximal.empty());
    }
}

TEST_CASE("add_pendant examples")
{
    auto p = add_pendant(monotone_path(2), 0, PendantSide::Below);
    CHECK(oracle::isomorphic(p, monotone_path(3)));

    CHECK(add_pendant(d_graph(4), 0, PendantSide::Below) == d_minus_graph(4));
    CHECK(add_pendant(d_graph(4), 3, PendantSide::Above) == d_plus_graph(4));

    auto k3 = build_graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    auto k3p = add_pendant(k3, 0, PendantSide::Below);
    // Frozen: the oracle accepts the 4-vertex result in all twenty types.
    CHECK(oracle::tileable(k3p));
    CHECK(is_tileable(k3p).value());

    expect_error(ErrorCode::BadAnchor, [&] { add_pendant(k3, 2, PendantSide::Below); });
    expect_error(ErrorCode::BadAnchor, [&] { add_pendant(k3, 1, PendantSide::Above); });
    expect_error(ErrorCode::BadAnchor, [] { add_pendant(EdgeOrderedGraph::from_sorted_edges(2, {}), 0, PendantSide::Below); });
}

TEST_CASE("add_two_pendants examples")
{
    auto f6 = add_two_pendants(d_graph(4), 0, 3);
    CHECK(f6.vertex_count() == 6);
    CHECK(is_tileable(f6).value());
    std::vector<Vertex> core{0, 1, 2, 3};
    CHECK(induced_subgraph(f6, core) == d_graph(4));

    auto p = add_two_pendants(monotone_path(1), 0, 1);
    CHECK(oracle::isomorphic(p, monotone_path(3)));

    auto c5 = monotone_cycle(5);
    auto ev = extremal_vertices(c5);
    Vertex vmin = ev.minimal.front();
    Vertex vmax = -1;
    for (auto v : ev.maximal)
        if (v != vmin && vmax < 0)
            vmax = v;
    REQUIRE(vmax >= 0);
    auto c7 = add_two_pendants(c5, vmin, vmax);
    CHECK(c7.vertex_count() == 7);
    // Frozen: the oracle confirms all twenty types for the 7-vertex result.
    CHECK(oracle::tileable(c7));
    CHECK(is_tileable(c7).value());

    expect_error(ErrorCode::BadAnchor, [] { add_two_pendants(d_graph(4), 0, 0); });
    expect_error(ErrorCode::BadAnchor, [] { add_two_pendants(d_graph(4), 1, 3); });
    expect_error(ErrorCode::NotTuranable, [] { add_two_pendants(monotone_cycle(4), 0, 3); });
}

TEST_CASE("family_graph examples")
{
    auto d4 = family_graph("D(4)");
    CHECK(d4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});

    auto c4 = family_graph("MonoCycle(4)");
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});

    auto p = family_graph("PathRanks(132)");
    CHECK(p.vertex_count() == 4);
    CHECK(p.rank(1, 2) == 3);
    CHECK(family_graph("PathRanks(1,3,2)") == p);
    CHECK(family_graph("MonoPath(3)") == monotone_path(3));
    CHECK(family_graph("C4_1243") == c4_1243());
    CHECK(family_graph("Dplus(4)") == d_plus_graph(4));
    CHECK(family_graph("Dminus(4)") == d_minus_graph(4));

    for (auto bad : {"D(x)", "Q(3)", "D(4", "PathRanks(1,1)", "", "MonoCycle(2)"})
        expect_error(ErrorCode::BadSpec, [&] { family_graph(bad); });
}

TEST_CASE("turanable_four_coloring examples")
{
    auto d4 = turanable_four_coloring(d_graph(4));
    CHECK(is_proper_coloring(d_graph(4), d4.color));
    CHECK(*std::max_element(d4.color.begin(), d4.color.end()) < 4);
    CHECK(chromatic_number(d_graph(4)) == 3);

    auto c5 = turanable_four_coloring(monotone_cycle(5));
    CHECK(is_proper_coloring(monotone_cycle(5), c5.color));

    auto e = turanable_four_coloring(monotone_path(1));
    CHECK(std::set<int>(e.color.begin(), e.color.end()).size() == 2);

    expect_error(ErrorCode::NotTuranable, [] { turanable_four_coloring(monotone_cycle(4)); });
}

TEST_CASE("property: four-colouring structure over the catalog")
{
    for (const auto & g : oracle::catalog(4)) {
        if (! is_turanable(g).value())
            continue;
        auto fc = turanable_four_coloring(g);
        CHECK(is_proper_coloring(g, fc.color));
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                if (g.has_edge(u, v)) {
                    CHECK_FALSE((fc.in_s[u] && fc.in_s[v]));
                    CHECK_FALSE((fc.in_s_prime[u] && fc.in_s_prime[v]));
                }
    }
}

TEST_CASE("property: verdicts agree with the definitional oracle over the catalog")
{
    // Frozen catalog figures, recomputed here by the oracle.
    auto catalog = oracle::catalog(4);
    CHECK(catalog.size() == 91);
    int turan = 0, tile = 0;
    std::vector<EdgeOrderedGraph> gap;
    for (const auto & g : catalog) {
        bool t = oracle::turanable(g), s = oracle::tileable(g);
        auto tv = is_turanable(g);
        auto sv = is_tileable(g);
        CHECK(tv.value() == t);
        CHECK(sv.value() == s);
        check_turan_certificates(g, tv);
        check_tile_certificates(g, sv);
        turan += t;
        tile += s;
        if (t && ! s)
            gap.push_back(g);
    }
    CHECK(turan == 24);
    CHECK(tile == 22);
    REQUIRE(gap.size() == 2);
    CHECK(std::any_of(gap.begin(), gap.end(), [](const EdgeOrderedGraph & g) { return oracle::isomorphic(g, d_graph(4)); }));
    CHECK(std::any_of(gap.begin(), gap.end(), [](const EdgeOrderedGraph & g) { return oracle::isomorphic(g, c4_1243()); }));
}

TEST_CASE("property: tileable implies Turanable, verdicts are reverse-invariant")
{
    auto graphs = oracle::catalog(4);
    for (auto g : {d_graph(5), d_plus_graph(4), d_minus_graph(4), monotone_cycle(5), monotone_cycle(6), monotone_path(5),
             path_with_ranks({1, 4, 2, 3}), add_two_pendants(d_graph(4), 0, 3)})
        graphs.push_back(g);
    for (const auto & g : graphs) {
        auto s = is_tileable(g);
        auto t = is_turanable(g);
        if (s.value())
            CHECK(t.value());
        CHECK(is_turanable(reverse(g)).value() == t.value());
        CHECK(is_tileable(reverse(g)).value() == s.value());
    }
}

TEST_CASE("property: a failing type stays failing in larger cliques")
{
    for (const auto & g : oracle::catalog(4)) {
        if (g.edge_count() == 0)
            continue;
        int f = g.vertex_count();
        auto t = is_turanable(g);
        if (t.failing)
            CHECK(find_embedding(g, canonical_clique(*t.failing, 2 * f)).absent());
        auto s = is_tileable(g);
        if (s.failing) {
            auto host = star_canonical_clique(*s.failing, f + 2).graph;
            for (const auto & m : oracle::embeddings(g, host))
                CHECK(std::find(m.begin(), m.end(), 0) == m.end());
        }
    }
}

TEST_CASE("exhaustive C_4 and K_4 minus an edge")
{
    auto c4 = enumerate_orderings(monotone_cycle(4));
    REQUIRE(c4.size() == 3);
    int turan = 0;
    for (const auto & g : c4)
        if (is_turanable(g).value()) {
            ++turan;
            CHECK(oracle::isomorphic(g, c4_1243()));
        }
    CHECK(turan == 1);

    auto k4m = enumerate_orderings(d_graph(4));
    turan = 0;
    for (const auto & g : k4m) {
        CHECK_FALSE(is_tileable(g).value());
        if (is_turanable(g).value()) {
            ++turan;
            CHECK(oracle::isomorphic(g, d_graph(4)));
        }
    }
    CHECK(turan == 1);

    CHECK_FALSE(is_tileable(d_plus_graph(4)).value());
    CHECK_FALSE(is_tileable(d_minus_graph(4)).value());
}
