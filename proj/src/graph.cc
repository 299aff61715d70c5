#include <eotile/graph.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eotile {

auto error_code_name(ErrorCode code) -> const char *
{
    switch (code) {
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::RankCollision: return "RankCollision";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BadSize: return "BadSize";
        case ErrorCode::NotComplete: return "NotComplete";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::NotTuranable: return "NotTuranable";
        case ErrorCode::BadAnchor: return "BadAnchor";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::BadDivisibility: return "BadDivisibility";
        case ErrorCode::BadSplit: return "BadSplit";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownExperiment: return "UnknownExperiment";
    }
    return "Unknown";
}

auto search_status_name(SearchStatus s) -> const char *
{
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

auto EdgeOrderedGraph::from_sorted_edges(int n, std::vector<Edge> edges) -> EdgeOrderedGraph
{
    if (n < 0)
        throw Error(ErrorCode::BadVertex, "negative vertex count");

    EdgeOrderedGraph g;
    g._n = n;
    g._rank.assign(static_cast<std::size_t>(n) * n, 0);
    g._incident.resize(n);
    g._edges.reserve(edges.size());

    Rank r = 0;
    for (auto e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
            throw Error(ErrorCode::BadVertex, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " on " + std::to_string(n) + " vertices");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (g._rank[e.u * n + e.v] != 0)
            throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " listed twice");
        ++r;
        g._rank[e.u * n + e.v] = r;
        g._rank[e.v * n + e.u] = r;
        g._edges.push_back(e);
        g._incident[e.u].push_back({r, e.v});
        g._incident[e.v].push_back({r, e.u});
    }
    return g;
}

auto CanonicalCode::hex() const -> std::string
{
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

auto build_graph(int n, std::span<const LabeledEdge> ranked_edges) -> EdgeOrderedGraph
{
    std::vector<LabeledEdge> sorted(ranked_edges.begin(), ranked_edges.end());
    for (auto & e : sorted)
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
            throw Error(ErrorCode::BadVertex, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " on " + std::to_string(n) + " vertices");

    // Duplicate pairs are reported ahead of label collisions: a repeated pair
    // is a multigraph regardless of its labels.
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (auto & e : sorted)
        if (! pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " listed twice");

    std::stable_sort(sorted.begin(), sorted.end(), [](const auto & a, const auto & b) { return a.label < b.label; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].label == sorted[i - 1].label)
            throw Error(ErrorCode::RankCollision, "label " + std::to_string(sorted[i].label) + " used twice");

    std::vector<Edge> edges;
    edges.reserve(sorted.size());
    for (auto & e : sorted)
        edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    return EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
}

auto build_graph(int n, std::initializer_list<LabeledEdge> ranked_edges) -> EdgeOrderedGraph
{
    return build_graph(n, std::span<const LabeledEdge>(ranked_edges.begin(), ranked_edges.size()));
}

auto reverse(const EdgeOrderedGraph & g) -> EdgeOrderedGraph
{
    std::vector<Edge> edges(g.edges().rbegin(), g.edges().rend());
    return EdgeOrderedGraph::from_sorted_edges(g.vertex_count(), std::move(edges));
}

auto induced_subgraph(const EdgeOrderedGraph & g, std::span<const Vertex> s) -> EdgeOrderedGraph
{
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Vertex> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(sorted[i]) + " not in graph");
        new_id[sorted[i]] = static_cast<Vertex>(i);
    }

    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            edges.push_back({new_id[e.u], new_id[e.v]});
    return EdgeOrderedGraph::from_sorted_edges(static_cast<int>(sorted.size()), std::move(edges));
}

auto relabel(const EdgeOrderedGraph & g, std::span<const Vertex> perm) -> EdgeOrderedGraph
{
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto e : g.edges()) {
        Vertex a = perm[e.u], b = perm[e.v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return EdgeOrderedGraph::from_sorted_edges(g.vertex_count(), std::move(edges));
}

auto with_ranks(const EdgeOrderedGraph & g, std::span<const Rank> ranks) -> EdgeOrderedGraph
{
    std::vector<Edge> edges(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        edges.at(ranks[i] - 1) = g.edges()[i];
    return EdgeOrderedGraph::from_sorted_edges(g.vertex_count(), std::move(edges));
}

namespace
{
    // Canonical form: relabel vertices in order of first appearance while
    // scanning edges by rank. An edge with two fresh endpoints can be labelled
    // either way round, so we branch there and keep the lexicographically
    // least edge sequence. Isolated vertices take the trailing labels.
    struct CodeSearch {
        int n;
        const std::vector<Edge> & edges;
        std::vector<int> label;
        std::vector<std::uint8_t> current, best;
        bool have_best = false;

        CodeSearch(int n_, const std::vector<Edge> & e) :
            n(n_), edges(e), label(n_, -1)
        {
            current.reserve(2 * e.size());
        }

        void emit_and_recurse(std::size_t r, int next, bool tight, std::uint8_t a, std::uint8_t b)
        {
            std::size_t pos = current.size();
            if (tight && have_best) {
                if (a > best[pos] || (a == best[pos] && b > best[pos + 1]))
                    return;
                if (a < best[pos] || b < best[pos + 1])
                    tight = false;
            }
            current.push_back(a);
            current.push_back(b);
            search(r + 1, next, tight);
            current.resize(pos);
        }

        void search(std::size_t r, int next, bool tight)
        {
            if (r == edges.size()) {
                if (! have_best || ! tight) {
                    best = current;
                    have_best = true;
                }
                return;
            }

            auto [u, v] = edges[r];
            int lu = label[u], lv = label[v];
            if (lu >= 0 && lv >= 0) {
                emit_and_recurse(r, next, tight, std::min(lu, lv), std::max(lu, lv));
            }
            else if (lu >= 0 || lv >= 0) {
                Vertex fresh = lu >= 0 ? v : u;
                int known = lu >= 0 ? lu : lv;
                label[fresh] = next;
                emit_and_recurse(r, next + 1, tight, known, next);
                label[fresh] = -1;
            }
            else {
                for (int flip = 0; flip < 2; ++flip) {
                    label[flip ? v : u] = next;
                    label[flip ? u : v] = next + 1;
                    // tight may have been cleared by the first branch's best; recheck
                    emit_and_recurse(r, next + 2, have_best ? tight_against_best() : tight, next, next + 1);
                    label[u] = label[v] = -1;
                }
            }
        }

        auto tight_against_best() const -> bool
        {
            return std::equal(current.begin(), current.end(), best.begin());
        }
    };

    auto code_from_edges(int n, const std::vector<Edge> & edges) -> CanonicalCode
    {
        CodeSearch search(n, edges);
        search.search(0, 0, true);
        CanonicalCode code;
        code.bytes.reserve(4 + search.best.size());
        code.bytes.push_back(static_cast<std::uint8_t>(n));
        code.bytes.push_back(static_cast<std::uint8_t>(edges.size() & 0xff));
        code.bytes.push_back(static_cast<std::uint8_t>(edges.size() >> 8));
        code.bytes.insert(code.bytes.end(), search.best.begin(), search.best.end());
        return code;
    }
}

auto canonical_code(const EdgeOrderedGraph & g) -> CanonicalCode
{
    if (g.vertex_count() > 255)
        throw Error(ErrorCode::BadSize, "canonical codes support at most 255 vertices");
    return code_from_edges(g.vertex_count(), g.edges());
}

auto are_order_isomorphic(const EdgeOrderedGraph & f, const EdgeOrderedGraph & g) -> std::optional<IsoCertificate>
{
    int n = f.vertex_count();
    if (n != g.vertex_count() || f.edge_count() != g.edge_count())
        return std::nullopt;

    // Dense ranks force the edge of rank r in f onto the edge of rank r in g,
    // so only the orientation of each edge is free.
    std::vector<Vertex> map(n, -1), inverse(n, -1);
    std::optional<std::vector<Vertex>> best;

    auto iso_f = isolated_vertices(f), iso_g = isolated_vertices(g);
    if (iso_f.size() != iso_g.size())
        return std::nullopt;

    auto assign = [&](Vertex a, Vertex b) -> int {
        // 1: newly assigned, 0: already consistent, -1: conflict
        if (map[a] == b)
            return 0;
        if (map[a] != -1 || inverse[b] != -1)
            return -1;
        map[a] = b;
        inverse[b] = a;
        return 1;
    };
    auto unassign = [&](Vertex a) {
        inverse[map[a]] = -1;
        map[a] = -1;
    };

    std::function<void(std::size_t)> search = [&](std::size_t r) {
        if (r == f.edges().size()) {
            auto full = map;
            for (std::size_t i = 0; i < iso_f.size(); ++i)
                full[iso_f[i]] = iso_g[i];
            if (! best || full < *best)
                best = std::move(full);
            return;
        }
        auto ef = f.edges()[r];
        auto eg = g.edges()[r];
        for (int flip = 0; flip < 2; ++flip) {
            Vertex a = flip ? eg.v : eg.u, b = flip ? eg.u : eg.v;
            int s1 = assign(ef.u, a);
            if (s1 < 0)
                continue;
            int s2 = assign(ef.v, b);
            if (s2 >= 0)
                search(r + 1);
            if (s2 > 0)
                unassign(ef.v);
            if (s1 > 0)
                unassign(ef.u);
        }
    };
    search(0);

    if (! best)
        return std::nullopt;
    return IsoCertificate{std::move(*best)};
}

namespace
{
    auto factorial_capped(std::uint64_t m, std::uint64_t cap) -> std::uint64_t
    {
        std::uint64_t result = 1;
        for (std::uint64_t i = 2; i <= m; ++i) {
            if (result > cap / i)
                return cap + 1;
            result *= i;
        }
        return result;
    }
}

auto enumerate_orderings(const EdgeOrderedGraph & h, std::uint64_t budget) -> std::vector<EdgeOrderedGraph>
{
    auto m = static_cast<std::uint64_t>(h.edge_count());
    if (factorial_capped(m, budget) > budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(m) + "! orderings exceeds budget " + std::to_string(budget));

    // perm[i] is the original edge index placed at rank i + 1.
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<CanonicalCode, std::vector<Edge>> classes;
    std::vector<Edge> ordered(m);
    do {
        for (std::size_t i = 0; i < m; ++i)
            ordered[i] = h.edges()[perm[i]];
        auto code = code_from_edges(h.vertex_count(), ordered);
        classes.try_emplace(std::move(code), ordered);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<EdgeOrderedGraph> result;
    result.reserve(classes.size());
    for (auto & [code, edges] : classes)
        result.push_back(EdgeOrderedGraph::from_sorted_edges(h.vertex_count(), edges));
    return result;
}

auto chromatic_number(const EdgeOrderedGraph & g) -> int
{
    int n = g.vertex_count();
    if (n > 24)
        throw Error(ErrorCode::BudgetExceeded, "exact colouring limited to 24 vertices");
    if (n == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;

    // Colour vertices in decreasing degree order, trying k = 2, 3, ...
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<int> colour(n, -1);
    std::function<bool(int, int)> colourable = [&](int idx, int k) -> bool {
        if (idx == n)
            return true;
        Vertex v = order[idx];
        int max_used = -1;
        for (int i = 0; i < idx; ++i)
            max_used = std::max(max_used, colour[order[i]]);
        // symmetry breaking: a vertex may open at most one new colour
        for (int c = 0; c <= std::min(k - 1, max_used + 1); ++c) {
            bool ok = true;
            for (auto [r, w] : g.incident(v))
                if (colour[w] == c) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            colour[v] = c;
            if (colourable(idx + 1, k))
                return true;
            colour[v] = -1;
        }
        return false;
    };

    for (int k = 2;; ++k) {
        std::fill(colour.begin(), colour.end(), -1);
        if (colourable(0, k))
            return k;
    }
}

auto complete_graph(int n) -> EdgeOrderedGraph
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
}

auto is_complete(const EdgeOrderedGraph & g) -> bool
{
    auto n = static_cast<long>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

auto min_degree(const EdgeOrderedGraph & g) -> int
{
    int d = g.vertex_count() == 0 ? 0 : g.vertex_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        d = std::min(d, g.degree(v));
    return d;
}

auto isolated_vertices(const EdgeOrderedGraph & g) -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            result.push_back(v);
    return result;
}

auto to_string(const EdgeOrderedGraph & g) -> std::string
{
    std::ostringstream out;
    out << g.vertex_count() << ":";
    bool first = true;
    for (auto e : g.edges()) {
        out << (first ? "" : ",") << e.u << "-" << e.v;
        first = false;
    }
    return out.str();
}

}
