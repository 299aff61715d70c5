#include <eotile/embed.hh>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace eotile {

auto default_budget() -> SearchBudget
{
    SearchBudget budget;
    if (const char * env = std::getenv("EOTILE_NODE_BUDGET")) {
        char * end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && value > 0)
            budget.node_limit = value;
    }
    return budget;
}

auto is_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const Embedding & e) -> bool
{
    if (static_cast<int>(e.map.size()) != f.vertex_count())
        return false;
    std::vector<char> seen(h.vertex_count(), 0);
    for (auto v : e.map) {
        if (v < 0 || v >= h.vertex_count() || seen[v])
            return false;
        seen[v] = 1;
    }
    Rank prev = 0;
    for (auto edge : f.edges()) {
        Rank r = h.rank(e.map[edge.u], e.map[edge.v]);
        if (r == 0 || r <= prev)
            return false;
        prev = r;
    }
    return true;
}

namespace
{
    class EmbeddingSearch {
    public:
        EmbeddingSearch(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const EmbeddingConstraints & c,
            const SearchBudget & budget, const std::function<Visit(const Embedding &)> & visit) :
            _f(f), _h(h), _budget(budget), _visit(visit),
            _map(f.vertex_count(), -1), _used(h.vertex_count(), 0),
            _allowed(c.allowed.empty() ? std::vector<char>(h.vertex_count(), 1) : c.allowed),
            _forced(c.forced.empty() ? std::vector<Vertex>(f.vertex_count(), -1) : c.forced)
        {
            for (Vertex u = 0; u < f.vertex_count(); ++u)
                if (f.degree(u) == 0 && _forced[u] == -1)
                    _loose.push_back(u);
            _start = std::chrono::steady_clock::now();
        }

        auto run() -> EnumerationStats
        {
            if (_f.vertex_count() > _h.vertex_count() || _f.edge_count() > _h.edge_count())
                return _stats;
            for (Vertex u = 0; u < _f.vertex_count(); ++u) {
                Vertex t = _forced[u];
                if (t == -1)
                    continue;
                if (t < 0 || t >= _h.vertex_count() || ! _allowed[t] || _used[t] || _h.degree(t) < _f.degree(u))
                    return _stats;
                _map[u] = t;
                _used[t] = 1;
            }
            place_edge(0, 0);
            return _stats;
        }

    private:
        const EdgeOrderedGraph & _f;
        const EdgeOrderedGraph & _h;
        const SearchBudget & _budget;
        const std::function<Visit(const Embedding &)> & _visit;
        std::vector<Vertex> _map;
        std::vector<char> _used;
        std::vector<char> _allowed;
        std::vector<Vertex> _forced;
        std::vector<Vertex> _loose;
        EnumerationStats _stats;
        std::chrono::steady_clock::time_point _start;

        auto halted() const -> bool { return _stats.stopped || ! _stats.complete; }

        auto tick() -> bool
        {
            ++_stats.nodes;
            if (_stats.nodes > _budget.node_limit) {
                _stats.complete = false;
                return false;
            }
            if (_budget.time_limit.count() > 0 && (_stats.nodes & 0xfff) == 0
                && std::chrono::steady_clock::now() - _start > _budget.time_limit) {
                _stats.complete = false;
                return false;
            }
            return true;
        }

        auto can_host(Vertex pattern, Vertex host) const -> bool
        {
            return ! _used[host] && _allowed[host] && _h.degree(host) >= _f.degree(pattern);
        }

        void place_edge(std::size_t r, Rank prev)
        {
            if (halted() || ! tick())
                return;
            if (r == _f.edges().size()) {
                place_loose(0);
                return;
            }

            // Leave room for the remaining pattern edges above this one.
            Rank max_rank = _h.edge_count() - static_cast<Rank>(_f.edges().size() - 1 - r);
            auto [u, v] = _f.edges()[r];
            Vertex mu = _map[u], mv = _map[v];

            if (mu >= 0 && mv >= 0) {
                Rank rk = _h.rank(mu, mv);
                if (rk > prev && rk <= max_rank)
                    place_edge(r + 1, rk);
            }
            else if (mu >= 0 || mv >= 0) {
                Vertex anchor = mu >= 0 ? mu : mv;
                Vertex fresh = mu >= 0 ? v : u;
                const auto & inc = _h.incident(anchor);
                auto it = std::upper_bound(inc.begin(), inc.end(), prev, [](Rank p, const Incidence & i) { return p < i.rank; });
                for (; it != inc.end() && it->rank <= max_rank && ! halted(); ++it) {
                    if (_forced[fresh] != -1 || ! can_host(fresh, it->other))
                        continue;
                    assign(fresh, it->other);
                    place_edge(r + 1, it->rank);
                    unassign(fresh);
                }
            }
            else {
                for (Rank rk = prev + 1; rk <= max_rank && ! halted(); ++rk) {
                    auto [p, q] = _h.edge_at(rk);
                    for (int flip = 0; flip < 2 && ! halted(); ++flip) {
                        Vertex a = flip ? q : p, b = flip ? p : q;
                        if (! can_host(u, a) || ! can_host(v, b))
                            continue;
                        assign(u, a);
                        assign(v, b);
                        place_edge(r + 1, rk);
                        unassign(v);
                        unassign(u);
                    }
                }
            }
        }

        void place_loose(std::size_t i)
        {
            if (halted())
                return;
            if (i == _loose.size()) {
                ++_stats.visited;
                if (_visit(Embedding{_map}) == Visit::Stop)
                    _stats.stopped = true;
                return;
            }
            for (Vertex host = 0; host < _h.vertex_count() && ! halted(); ++host) {
                if (_used[host] || ! _allowed[host])
                    continue;
                assign(_loose[i], host);
                place_loose(i + 1);
                unassign(_loose[i]);
            }
        }

        void assign(Vertex pattern, Vertex host)
        {
            _map[pattern] = host;
            _used[host] = 1;
        }

        void unassign(Vertex pattern)
        {
            _used[_map[pattern]] = 0;
            _map[pattern] = -1;
        }
    };
}

auto for_each_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const EmbeddingConstraints & constraints,
    const SearchBudget & budget, const std::function<Visit(const Embedding &)> & visit) -> EnumerationStats
{
    if (! constraints.forced.empty() && static_cast<int>(constraints.forced.size()) != f.vertex_count())
        throw Error(ErrorCode::BadVertex, "forced map must cover every pattern vertex");
    if (! constraints.allowed.empty() && static_cast<int>(constraints.allowed.size()) != h.vertex_count())
        throw Error(ErrorCode::BadVertex, "allowed mask must cover every host vertex");
    EmbeddingSearch search(f, h, constraints, budget, visit);
    return search.run();
}

auto find_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget,
    const EmbeddingConstraints & constraints) -> SearchResult<Embedding>
{
    SearchResult<Embedding> result;
    auto stats = for_each_embedding(f, h, constraints, budget, [&](const Embedding & e) {
        result.value = e;
        return Visit::Stop;
    });
    result.nodes = stats.nodes;
    if (result.value)
        result.status = SearchStatus::Found;
    else
        result.status = stats.complete ? SearchStatus::Absent : SearchStatus::Inconclusive;
    return result;
}

auto count_embeddings(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget) -> std::uint64_t
{
    auto stats = for_each_embedding(f, h, {}, budget, [](const Embedding &) { return Visit::Continue; });
    if (! stats.complete)
        throw Error(ErrorCode::BudgetExceeded, "embedding count did not finish within " + std::to_string(budget.node_limit) + " nodes");
    return stats.visited;
}

auto automorphism_count(const EdgeOrderedGraph & f) -> std::uint64_t
{
    SearchBudget unlimited{~std::uint64_t{0}, std::chrono::milliseconds{0}};
    return count_embeddings(f, f, unlimited);
}

auto count_copies(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget) -> std::uint64_t
{
    return count_embeddings(f, h, budget) / automorphism_count(f);
}

auto monotone_path(int k) -> EdgeOrderedGraph
{
    if (k < 0)
        throw Error(ErrorCode::BadSize, "path length must be non-negative");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        edges.push_back({i, i + 1});
    return EdgeOrderedGraph::from_sorted_edges(k + 1, std::move(edges));
}

namespace
{
    // Edge subsets indexed by rank - 1.
    using EdgeMask = std::vector<char>;

    auto peel_search(const EdgeOrderedGraph & h, const EdgeMask & alive, int k, double zeta_fraction)
        -> std::optional<std::vector<Vertex>>
    {
        if (k == 1) {
            for (Rank r = 1; r <= h.edge_count(); ++r)
                if (alive[r - 1])
                    return std::vector<Vertex>{h.edge_at(r).u, h.edge_at(r).v};
            return std::nullopt;
        }

        int max_deg = 0;
        std::vector<std::vector<Rank>> live_incident(h.vertex_count());
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            for (auto inc : h.incident(v))
                if (alive[inc.rank - 1])
                    live_incident[v].push_back(inc.rank);
            max_deg = std::max(max_deg, static_cast<int>(live_incident[v].size()));
        }
        if (max_deg == 0)
            return std::nullopt;

        // Every vertex drops its last min(d(v), z) live edges at once.
        int z = std::max(1, static_cast<int>(zeta_fraction * max_deg));
        EdgeMask kept = alive;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            const auto & ranks = live_incident[v];
            int drop = std::min(static_cast<int>(ranks.size()), z);
            for (int i = 0; i < drop; ++i)
                kept[ranks[ranks.size() - 1 - i] - 1] = 0;
        }

        auto shorter = peel_search(h, kept, k - 1, zeta_fraction);
        if (! shorter)
            return std::nullopt;

        Vertex last = shorter->back();
        Rank last_rank = h.rank((*shorter)[shorter->size() - 2], last);
        for (auto inc : h.incident(last)) {
            if (inc.rank <= last_rank || ! alive[inc.rank - 1] || kept[inc.rank - 1])
                continue;
            if (std::find(shorter->begin(), shorter->end(), inc.other) != shorter->end())
                continue;
            shorter->push_back(inc.other);
            return shorter;
        }
        return std::nullopt;
    }

    auto extend_path(const EdgeOrderedGraph & h, std::vector<Vertex> & path, std::vector<char> & on_path, Rank prev, int remaining) -> bool
    {
        if (remaining == 0)
            return true;
        Vertex end = path.back();
        for (auto inc : h.incident(end)) {
            if (inc.rank <= prev || on_path[inc.other])
                continue;
            path.push_back(inc.other);
            on_path[inc.other] = 1;
            if (extend_path(h, path, on_path, inc.rank, remaining - 1))
                return true;
            on_path[inc.other] = 0;
            path.pop_back();
        }
        return false;
    }
}

auto find_monotone_path_by_peeling(const EdgeOrderedGraph & h, int k, double zeta_fraction) -> std::optional<std::vector<Vertex>>
{
    if (k < 1)
        throw Error(ErrorCode::BadSize, "monotone path length must be at least 1");
    EdgeMask all(h.edge_count(), 1);
    return peel_search(h, all, k, zeta_fraction);
}

auto find_monotone_path(const EdgeOrderedGraph & h, int k, const MonotonePathOptions & options) -> std::optional<std::vector<Vertex>>
{
    if (k < 1)
        throw Error(ErrorCode::BadSize, "monotone path length must be at least 1");
    if (k >= h.vertex_count())
        return std::nullopt;

    if (options.use_peeling)
        if (auto p = find_monotone_path_by_peeling(h, k, options.zeta_fraction))
            return p;

    std::vector<Vertex> path;
    std::vector<char> on_path(h.vertex_count(), 0);
    for (Rank r = 1; r <= h.edge_count(); ++r) {
        auto e = h.edge_at(r);
        for (int flip = 0; flip < 2; ++flip) {
            Vertex a = flip ? e.v : e.u, b = flip ? e.u : e.v;
            path = {a, b};
            on_path[a] = on_path[b] = 1;
            if (extend_path(h, path, on_path, r, k - 1))
                return path;
            on_path[a] = on_path[b] = 0;
        }
    }
    return std::nullopt;
}

namespace
{
    // Longest strictly monotone subsequence by quadratic DP; earliest
    // predecessor and earliest end on ties.
    auto longest_run(const std::vector<Rank> & seq, bool increasing) -> std::vector<std::size_t>
    {
        std::size_t n = seq.size();
        if (n == 0)
            return {};
        std::vector<std::size_t> len(n, 1), pred(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
                if (ok && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    pred[i] = j;
                }
            }
        std::size_t end = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (len[i] > len[end])
                end = i;
        std::vector<std::size_t> idx;
        for (std::size_t i = end; i != n; i = pred[i])
            idx.push_back(i);
        std::reverse(idx.begin(), idx.end());
        return idx;
    }
}

auto monotone_star_subsequence(const EdgeOrderedGraph & h, Vertex x) -> MonotoneSubsequence
{
    if (x < 0 || x >= h.vertex_count())
        throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(x) + " not in graph");
    std::vector<Vertex> nbrs;
    std::vector<Rank> ranks;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.has_edge(x, v)) {
            nbrs.push_back(v);
            ranks.push_back(h.rank(x, v));
        }
    auto inc = longest_run(ranks, true), dec = longest_run(ranks, false);
    MonotoneSubsequence result;
    result.increasing = inc.size() >= dec.size();
    for (auto i : (result.increasing ? inc : dec))
        result.vertices.push_back(nbrs[i]);
    return result;
}

auto star_color_name(StarColor c) -> const char *
{
    switch (c) {
        case StarColor::B: return "B";
        case StarColor::M: return "M";
        case StarColor::S: return "S";
    }
    return "?";
}

auto star_edge_coloring(const EdgeOrderedGraph & h, Vertex x, Vertex vi, Vertex vj) -> StarColor
{
    for (auto v : {x, vi, vj})
        if (v < 0 || v >= h.vertex_count())
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " not in graph");
    if (x == vi || x == vj || vi == vj)
        throw Error(ErrorCode::BadVertex, "colouring needs three distinct vertices");
    Rank xi = h.rank(x, vi), xj = h.rank(x, vj), ij = h.rank(vi, vj);
    if (xi == 0 || xj == 0 || ij == 0)
        throw Error(ErrorCode::MissingEdge, "colouring needs all three edges");
    if (xi > ij && xj > ij)
        return StarColor::B;
    if (xi < ij && xj < ij)
        return StarColor::S;
    return StarColor::M;
}

auto find_star_canonical_subclique(const EdgeOrderedGraph & h, Vertex x, int f, const SearchBudget & budget)
    -> SearchResult<StarSubclique>
{
    if (! is_complete(h))
        throw Error(ErrorCode::NotComplete, "star-canonical subclique search needs a complete host");
    if (x < 0 || x >= h.vertex_count())
        throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(x) + " not in graph");
    if (f < 3 || f > h.vertex_count())
        throw Error(ErrorCode::BadSize, "subclique size must be in [3, |H|]");

    SearchResult<StarSubclique> result;
    bool inconclusive = false;
    for (auto type : all_star_types()) {
        auto gen = star_canonical_clique(type, f);
        EmbeddingConstraints c;
        c.forced.assign(f, -1);
        c.forced[gen.special] = x;
        auto found = find_embedding(gen.graph, h, budget, c);
        result.nodes += found.nodes;
        if (found.found()) {
            result.status = SearchStatus::Found;
            result.value = StarSubclique{type, std::move(*found.value)};
            return result;
        }
        inconclusive = inconclusive || found.inconclusive();
    }
    result.status = inconclusive ? SearchStatus::Inconclusive : SearchStatus::Absent;
    return result;
}

}
