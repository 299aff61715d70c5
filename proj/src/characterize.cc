#include <eotile/characterize.hh>

#include <algorithm>
#include <cctype>
#include <queue>
#include <stdexcept>

namespace eotile {

auto decision_name(Decision d) -> const char *
{
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace
{
    auto trivially_decided(const EdgeOrderedGraph & f) -> bool
    {
        return f.vertex_count() <= 1 || f.edge_count() == 0;
    }
}

auto is_turanable(const EdgeOrderedGraph & f, const SearchBudget & budget) -> TuranVerdict
{
    TuranVerdict verdict;
    if (trivially_decided(f))
        return verdict;

    bool inconclusive = false;
    for (auto type : all_canonical_types) {
        auto result = find_embedding(f, canonical_clique(type, f.vertex_count()), budget);
        verdict.nodes += result.nodes;
        if (result.found())
            verdict.certificates.emplace(type, std::move(*result.value));
        else if (result.absent()) {
            verdict.decision = Decision::No;
            verdict.failing = type;
            verdict.certificates.clear();
            return verdict;
        }
        else
            inconclusive = true;
    }
    if (inconclusive) {
        verdict.decision = Decision::Inconclusive;
        verdict.certificates.clear();
    }
    return verdict;
}

auto is_tileable(const EdgeOrderedGraph & f, const SearchBudget & budget) -> TileVerdict
{
    TileVerdict verdict;
    // Below three vertices every star type degenerates; an edge or a pair of
    // isolated vertices tiles any K_t with t even.
    if (trivially_decided(f) || f.vertex_count() == 2)
        return verdict;

    bool inconclusive = false;
    for (auto type : all_star_types()) {
        auto host = star_canonical_clique(type, f.vertex_count());
        auto result = find_embedding(f, host.graph, budget);
        verdict.nodes += result.nodes;
        if (result.found())
            verdict.certificates.emplace(type, std::move(*result.value));
        else if (result.absent()) {
            verdict.decision = Decision::No;
            verdict.failing = type;
            verdict.certificates.clear();
            return verdict;
        }
        else
            inconclusive = true;
    }
    if (inconclusive) {
        verdict.decision = Decision::Inconclusive;
        verdict.certificates.clear();
        return verdict;
    }

    // Min is SmallerInc x Min, so tileable graphs are Turánable by construction.
    if (! is_turanable(f, budget).value())
        throw std::logic_error("tileable graph " + to_string(f) + " is not Turánable");
    return verdict;
}

auto is_universally_tileable(const EdgeOrderedGraph & h) -> bool
{
    std::vector<Vertex> live;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0)
            live.push_back(v);
    auto core = induced_subgraph(h, live);
    int n = core.vertex_count(), m = core.edge_count();

    if (n == 3 && m == 3)
        return true;
    if (n == 4 && m == 3) {
        std::vector<int> degrees;
        for (Vertex v = 0; v < n; ++v)
            degrees.push_back(core.degree(v));
        std::sort(degrees.begin(), degrees.end());
        if (degrees == std::vector<int>{1, 1, 2, 2})
            return true;
    }

    // Star forest: every edge has an endpoint of degree one, which rules out
    // cycles and paths on three edges.
    for (auto e : core.edges())
        if (core.degree(e.u) > 1 && core.degree(e.v) > 1)
            return false;
    return true;
}

auto extremal_vertices(const EdgeOrderedGraph & f, const SearchBudget & budget) -> ExtremalVertices
{
    auto verdict = is_turanable(f, budget);
    if (verdict.decision == Decision::Inconclusive)
        throw Error(ErrorCode::BudgetExceeded, "Turánability of " + to_string(f) + " undecided within budget");
    if (! verdict.value())
        throw Error(ErrorCode::NotTuranable, to_string(f) + " is not Turánable");

    int n = f.vertex_count();
    ExtremalVertices result;
    if (n == 0)
        return result;
    auto min_host = canonical_clique(CanonicalType::Min, std::max(n, 2));
    auto max_host = canonical_clique(CanonicalType::Max, std::max(n, 2));

    auto plays = [&](const EdgeOrderedGraph & host, Vertex v, Vertex role) {
        if (n == 1)
            return true;
        EmbeddingConstraints c;
        c.forced.assign(n, -1);
        c.forced[v] = role;
        auto r = find_embedding(f, host, budget, c);
        if (r.inconclusive())
            throw Error(ErrorCode::BudgetExceeded, "extremal vertex search exhausted its budget");
        return r.found();
    };
    for (Vertex v = 0; v < n; ++v) {
        if (plays(min_host, v, 0))
            result.minimal.push_back(v);
        if (plays(max_host, v, n - 1))
            result.maximal.push_back(v);
    }
    return result;
}

namespace
{
    auto with_extra_edges(const EdgeOrderedGraph & f, int extra_vertices, std::vector<LabeledEdge> extra) -> EdgeOrderedGraph
    {
        std::vector<LabeledEdge> edges;
        for (Rank r = 1; r <= f.edge_count(); ++r)
            edges.push_back({f.edge_at(r).u, f.edge_at(r).v, r});
        edges.insert(edges.end(), extra.begin(), extra.end());
        return build_graph(f.vertex_count() + extra_vertices, edges);
    }

    void check_vertex(const EdgeOrderedGraph & f, Vertex v)
    {
        if (v < 0 || v >= f.vertex_count())
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " not in graph");
    }
}

auto add_pendant(const EdgeOrderedGraph & f, Vertex v, PendantSide side) -> EdgeOrderedGraph
{
    check_vertex(f, v);
    if (f.edge_count() == 0)
        throw Error(ErrorCode::BadAnchor, "pendant extension needs at least one edge");
    Edge anchor = side == PendantSide::Below ? f.edge_at(1) : f.edge_at(f.edge_count());
    if (anchor.u != v && anchor.v != v)
        throw Error(ErrorCode::BadAnchor, "vertex " + std::to_string(v) + " is not on the "
                + (side == PendantSide::Below ? "smallest" : "largest") + " edge");
    Vertex fresh = f.vertex_count();
    Label label = side == PendantSide::Below ? 0 : f.edge_count() + 1;
    return with_extra_edges(f, 1, {{v, fresh, label}});
}

auto add_two_pendants(const EdgeOrderedGraph & f, Vertex vmin, Vertex vmax, const SearchBudget & budget) -> EdgeOrderedGraph
{
    check_vertex(f, vmin);
    check_vertex(f, vmax);
    if (vmin == vmax)
        throw Error(ErrorCode::BadAnchor, "minimal and maximal anchors must be distinct");
    if (f.degree(vmin) == 0 || f.degree(vmax) == 0)
        throw Error(ErrorCode::BadAnchor, "anchors must not be isolated");
    auto ext = extremal_vertices(f, budget);
    if (std::find(ext.minimal.begin(), ext.minimal.end(), vmin) == ext.minimal.end())
        throw Error(ErrorCode::BadAnchor, "vertex " + std::to_string(vmin) + " is not minimal");
    if (std::find(ext.maximal.begin(), ext.maximal.end(), vmax) == ext.maximal.end())
        throw Error(ErrorCode::BadAnchor, "vertex " + std::to_string(vmax) + " is not maximal");
    Vertex low = f.vertex_count(), high = low + 1;
    return with_extra_edges(f, 2, {{vmin, low, 0}, {vmax, high, f.edge_count() + 1}});
}

auto d_graph(int n) -> EdgeOrderedGraph
{
    if (n < 3)
        throw Error(ErrorCode::BadSpec, "D(n) needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j)
        edges.push_back({0, j});
    for (Vertex i = 1; i < n - 1; ++i)
        edges.push_back({i, n - 1});
    return EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
}

auto d_plus_graph(int n) -> EdgeOrderedGraph
{
    auto d = d_graph(n);
    return with_extra_edges(d, 1, {{n - 1, n, d.edge_count() + 1}});
}

auto d_minus_graph(int n) -> EdgeOrderedGraph
{
    return with_extra_edges(d_graph(n), 1, {{0, n, 0}});
}

auto monotone_cycle(int n) -> EdgeOrderedGraph
{
    if (n < 3)
        throw Error(ErrorCode::BadSpec, "MonoCycle(n) needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
}

auto path_with_ranks(const std::vector<int> & ranks) -> EdgeOrderedGraph
{
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), ranks[i]});
    try {
        return build_graph(static_cast<int>(ranks.size()) + 1, edges);
    }
    catch (const Error & e) {
        throw Error(ErrorCode::BadSpec, std::string("path ranks invalid: ") + e.what());
    }
}

auto c4_1243() -> EdgeOrderedGraph
{
    // w1w2 < w2w3 < w1w4 < w3w4
    return build_graph(4, {{0, 1, 1}, {1, 2, 2}, {0, 3, 3}, {2, 3, 4}});
}

namespace
{
    auto parse_int(const std::string & s, const std::string & descriptor) -> int
    {
        if (s.empty() || s.size() > 6 || ! std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error(ErrorCode::BadSpec, "bad integer in '" + descriptor + "'");
        return std::stoi(s);
    }
}

auto family_graph(const std::string & descriptor) -> EdgeOrderedGraph
{
    std::string d;
    for (char c : descriptor)
        if (! std::isspace(static_cast<unsigned char>(c)))
            d.push_back(c);
    if (d == "C4_1243")
        return c4_1243();

    auto open = d.find('(');
    if (open == std::string::npos || d.back() != ')')
        throw Error(ErrorCode::BadSpec, "malformed family descriptor '" + descriptor + "'");
    auto name = d.substr(0, open), arg = d.substr(open + 1, d.size() - open - 2);

    if (name == "PathRanks") {
        std::vector<int> ranks;
        if (arg.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= arg.size()) {
                auto comma = arg.find(',', start);
                if (comma == std::string::npos)
                    comma = arg.size();
                ranks.push_back(parse_int(arg.substr(start, comma - start), descriptor));
                start = comma + 1;
            }
        }
        else
            for (char c : arg) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw Error(ErrorCode::BadSpec, "bad rank digit in '" + descriptor + "'");
                ranks.push_back(c - '0');
            }
        if (ranks.empty())
            throw Error(ErrorCode::BadSpec, "empty rank string in '" + descriptor + "'");
        return path_with_ranks(ranks);
    }

    int k = parse_int(arg, descriptor);
    if (name == "D")
        return d_graph(k);
    if (name == "Dplus")
        return d_plus_graph(k);
    if (name == "Dminus")
        return d_minus_graph(k);
    if (name == "MonoCycle")
        return monotone_cycle(k);
    if (name == "MonoPath")
        return monotone_path(k);
    throw Error(ErrorCode::BadSpec, "unknown family '" + name + "'");
}

auto is_proper_coloring(const EdgeOrderedGraph & g, const std::vector<int> & color) -> bool
{
    if (static_cast<int>(color.size()) != g.vertex_count())
        return false;
    for (auto e : g.edges())
        if (color[e.u] == color[e.v])
            return false;
    return true;
}

auto turanable_four_coloring(const EdgeOrderedGraph & f, const SearchBudget & budget) -> FourColoring
{
    auto verdict = is_turanable(f, budget);
    if (verdict.decision == Decision::Inconclusive)
        throw Error(ErrorCode::BudgetExceeded, "Turánability of " + to_string(f) + " undecided within budget");
    if (! verdict.value())
        throw Error(ErrorCode::NotTuranable, to_string(f) + " is not Turánable");

    int n = f.vertex_count();
    FourColoring result;
    result.color.assign(n, 0);
    result.in_s.assign(n, 0);
    result.in_s_prime.assign(n, 0);
    if (n == 0)
        return result;
    if (f.edge_count() == 0)
        return result;

    // position[v] is the index of v's image in the canonical clique.
    auto order_of = [&](CanonicalType t, std::vector<Vertex> & order, std::vector<int> & position) {
        const auto & map = verdict.certificates.at(t).map;
        order.assign(n, -1);
        position.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            order[map[v]] = v;
            position[v] = map[v];
        }
    };
    std::vector<int> pos_min, pos_inv;
    order_of(CanonicalType::Min, result.min_order, pos_min);
    order_of(CanonicalType::InvMin, result.invmin_order, pos_inv);

    auto no_later_neighbour = [&](Vertex v, const std::vector<int> & pos) {
        for (auto inc : f.incident(v))
            if (pos[inc.other] > pos[v])
                return false;
        return true;
    };
    for (Vertex v = 0; v < n; ++v) {
        result.in_s[v] = no_later_neighbour(v, pos_min);
        result.in_s_prime[v] = no_later_neighbour(v, pos_inv);
    }

    std::vector<char> in_t(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (result.in_s[v])
            result.color[v] = 0;
        else if (result.in_s_prime[v])
            result.color[v] = 1;
        else
            in_t[v] = 1;
    }

    // F[T] is a forest; 2-colour it with colours 2 and 3.
    std::vector<int> side(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (! in_t[root] || side[root] != -1)
            continue;
        side[root] = 0;
        std::queue<Vertex> q;
        q.push(root);
        while (! q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (auto inc : f.incident(v)) {
                if (! in_t[inc.other])
                    continue;
                if (side[inc.other] == -1) {
                    side[inc.other] = 1 - side[v];
                    q.push(inc.other);
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_t[v])
            result.color[v] = 2 + side[v];

    if (! is_proper_coloring(f, result.color))
        throw std::logic_error("four-colouring of " + to_string(f) + " is not proper");
    return result;
}

}
