#include <eotile/characterize.hh>
#include <eotile/random.hh>
#include <eotile/tiling.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace eotile {

namespace
{
    using Mask = std::uint64_t;

    auto bit(Vertex v) -> Mask { return Mask{1} << v; }

    auto mask_of(const std::vector<Vertex> & vs) -> Mask
    {
        Mask m = 0;
        for (auto v : vs)
            m |= bit(v);
        return m;
    }

    auto check_host_size(const EdgeOrderedGraph & h)
    {
        if (h.vertex_count() > 64)
            throw Error(ErrorCode::BadSize, "tiling search supports at most 64 host vertices");
    }

    // Exact cover of `target` by pairwise disjoint candidate masks, always
    // branching on the lowest uncovered vertex. Failed states are memoized.
    class MaskCover {
    public:
        MaskCover(int n, const std::vector<Mask> & candidates, const SearchBudget & budget) :
            _candidates(candidates), _budget(budget), _by_vertex(n)
        {
            for (std::size_t i = 0; i < candidates.size(); ++i)
                for (Vertex v = 0; v < n; ++v)
                    if (candidates[i] & bit(v))
                        _by_vertex[v].push_back(i);
        }

        auto solve(Mask target, Mask covered) -> SearchStatus
        {
            _chosen.clear();
            _failed.clear();
            _exhausted = false;
            if (search(target, covered))
                return SearchStatus::Found;
            return _exhausted ? SearchStatus::Inconclusive : SearchStatus::Absent;
        }

        auto chosen() const -> const std::vector<std::size_t> & { return _chosen; }
        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        const std::vector<Mask> & _candidates;
        const SearchBudget & _budget;
        std::vector<std::vector<std::size_t>> _by_vertex;
        std::vector<std::size_t> _chosen;
        std::unordered_set<Mask> _failed;
        std::uint64_t _nodes = 0;
        bool _exhausted = false;

        auto search(Mask target, Mask covered) -> bool
        {
            if ((covered & target) == target)
                return true;
            if (++_nodes > _budget.node_limit) {
                _exhausted = true;
                return false;
            }
            if (_failed.contains(covered))
                return false;
            Mask open = target & ~covered;
            Vertex v = static_cast<Vertex>(__builtin_ctzll(open));
            for (auto i : _by_vertex[v]) {
                Mask c = _candidates[i];
                if ((c & covered) || (c & ~target))
                    continue;
                _chosen.push_back(i);
                if (search(target, covered | c))
                    return true;
                _chosen.pop_back();
                if (_exhausted)
                    return false;
            }
            _failed.insert(covered);
            return false;
        }
    };

    struct Copies {
        std::vector<Mask> masks;
        std::vector<Embedding> embeddings;
        bool complete = true;
        std::uint64_t nodes = 0;
    };

    // One copy of f per vertex set, first in engine order.
    auto copies_by_vertex_set(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const SearchBudget & budget,
        const EmbeddingConstraints & constraints = {}) -> Copies
    {
        Copies copies;
        std::unordered_map<Mask, std::size_t> index;
        auto stats = for_each_embedding(f, h, constraints, budget, [&](const Embedding & e) {
            Mask m = mask_of(e.map);
            if (index.emplace(m, copies.masks.size()).second) {
                copies.masks.push_back(m);
                copies.embeddings.push_back(e);
            }
            return Visit::Continue;
        });
        copies.complete = stats.complete;
        copies.nodes = stats.nodes;
        return copies;
    }

    auto sorted_cover(const std::vector<Embedding> & pieces) -> std::vector<Vertex>
    {
        std::vector<Vertex> covered;
        for (const auto & p : pieces)
            covered.insert(covered.end(), p.map.begin(), p.map.end());
        std::sort(covered.begin(), covered.end());
        return covered;
    }

    auto make_tiling(std::vector<Embedding> pieces) -> Tiling
    {
        Tiling t;
        t.covered = sorted_cover(pieces);
        t.pieces = std::move(pieces);
        return t;
    }

    // Subgraph on `vs` with vertex i standing for vs[i], original ranks kept.
    auto subgraph_on(const EdgeOrderedGraph & g, const std::vector<Vertex> & vs) -> EdgeOrderedGraph
    {
        std::vector<LabeledEdge> edges;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (Rank r = g.rank(vs[i], vs[j]))
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), r});
        return build_graph(static_cast<int>(vs.size()), edges);
    }

    auto lift(const Embedding & e, const std::vector<Vertex> & vs) -> Embedding
    {
        Embedding out;
        for (auto v : e.map)
            out.map.push_back(vs[v]);
        return out;
    }

    void require_divides(int part, int whole, const char * what)
    {
        if (part <= 0 || whole % part != 0)
            throw Error(ErrorCode::BadDivisibility, std::string(what) + ": " + std::to_string(part) + " does not divide " + std::to_string(whole));
    }
}

auto verify_tiling(const EdgeOrderedGraph & host, const EdgeOrderedGraph & f, const Tiling & tiling) -> bool
{
    std::vector<char> seen(host.vertex_count(), 0);
    std::vector<Vertex> covered;
    for (const auto & piece : tiling.pieces) {
        if (! is_embedding(f, host, piece))
            return false;
        for (auto v : piece.map) {
            if (seen[v])
                return false;
            seen[v] = 1;
            covered.push_back(v);
        }
    }
    std::sort(covered.begin(), covered.end());
    return covered == tiling.covered;
}

auto perfect_tiling_exact(const EdgeOrderedGraph & host, const EdgeOrderedGraph & f, const SearchBudget & budget) -> SearchResult<Tiling>
{
    check_host_size(host);
    if (f.vertex_count() == 0)
        throw Error(ErrorCode::BadSize, "cannot tile with the empty graph");
    require_divides(f.vertex_count(), host.vertex_count(), "perfect tiling");

    SearchResult<Tiling> result;
    if (host.vertex_count() == 0) {
        result.status = SearchStatus::Found;
        result.value = Tiling{};
        return result;
    }

    auto copies = copies_by_vertex_set(f, host, budget);
    result.nodes = copies.nodes;
    if (! copies.complete) {
        result.status = SearchStatus::Inconclusive;
        return result;
    }

    MaskCover cover(host.vertex_count(), copies.masks, budget);
    Mask all = host.vertex_count() == 64 ? ~Mask{0} : (bit(host.vertex_count()) - 1);
    result.status = cover.solve(all, 0);
    result.nodes += cover.nodes();
    if (result.found()) {
        std::vector<Embedding> pieces;
        for (auto i : cover.chosen())
            pieces.push_back(copies.embeddings[i]);
        result.value = make_tiling(std::move(pieces));
    }
    return result;
}

auto tiling_number(const EdgeOrderedGraph & f, int t_max, const SearchBudget & budget) -> TilingNumber
{
    TilingNumber result;
    int size = f.vertex_count();
    if (size == 0)
        throw Error(ErrorCode::BadSize, "tiling number of the empty graph is undefined");

    auto verdict = is_tileable(f, budget);
    if (verdict.decision == Decision::Inconclusive) {
        result.status = SearchStatus::Inconclusive;
        return result;
    }
    if (! verdict.value()) {
        result.tileable = false;
        result.status = SearchStatus::Absent;
        return result;
    }

    bool inconclusive = false;
    for (int t = size; t <= t_max; t += size) {
        std::vector<EdgeOrderedGraph> classes;
        try {
            classes = enumerate_orderings(complete_graph(t));
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::BudgetExceeded)
                throw;
            result.status = SearchStatus::Inconclusive;
            return result;
        }
        result.sizes_checked.push_back(t);
        result.classes_checked.push_back(classes.size());

        bool all = true;
        for (const auto & host : classes) {
            auto tiling = perfect_tiling_exact(host, f, budget);
            if (tiling.inconclusive())
                inconclusive = true;
            if (! tiling.found()) {
                all = false;
                break;
            }
        }
        if (all && ! inconclusive) {
            result.status = SearchStatus::Found;
            result.value = t;
            return result;
        }
        if (inconclusive)
            break;
    }
    result.status = inconclusive ? SearchStatus::Inconclusive : SearchStatus::Absent;
    return result;
}

auto is_monotone_path(const EdgeOrderedGraph & g, const std::vector<Vertex> & path) -> bool
{
    Rank prev = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Rank r = g.rank(path[i], path[i + 1]);
        if (r == 0 || r <= prev)
            return false;
        prev = r;
    }
    std::vector<Vertex> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace
{
    // Monotone path through exactly the vertices of `set`.
    auto spanning_monotone_path(const EdgeOrderedGraph & g, const std::vector<Vertex> & set) -> std::optional<std::vector<Vertex>>
    {
        if (set.size() == 1)
            return set;
        std::vector<Vertex> path;
        std::vector<char> used(set.size(), 0);
        std::function<bool(Rank)> extend = [&](Rank prev) -> bool {
            if (path.size() == set.size())
                return true;
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (used[i])
                    continue;
                Rank r = g.rank(path.back(), set[i]);
                if (r == 0 || r <= prev)
                    continue;
                used[i] = 1;
                path.push_back(set[i]);
                if (extend(r))
                    return true;
                path.pop_back();
                used[i] = 0;
            }
            return false;
        };
        for (std::size_t s = 0; s < set.size(); ++s) {
            used.assign(set.size(), 0);
            used[s] = 1;
            path = {set[s]};
            if (extend(0))
                return path;
        }
        return std::nullopt;
    }

    auto with_front(Vertex v, const std::vector<Vertex> & rest) -> std::vector<Vertex>
    {
        std::vector<Vertex> out{v};
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    auto same_set(std::vector<Vertex> a, std::vector<Vertex> b) -> bool
    {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    template <typename F>
    auto for_each_subset(const std::vector<Vertex> & pool, std::size_t size, F && visit) -> bool
    {
        if (size > pool.size())
            return false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            std::vector<Vertex> subset;
            for (auto i : idx)
                subset.push_back(pool[i]);
            if (visit(subset))
                return true;
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == pool.size() - size + i - 1)
                --i;
            if (i == 0)
                return false;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
}

auto AbsorberSet::vertices() const -> std::vector<Vertex>
{
    std::vector<Vertex> all = p_x;
    all.insert(all.end(), p_y.begin(), p_y.end());
    all.push_back(w);
    std::sort(all.begin(), all.end());
    return all;
}

auto is_local_absorber(const EdgeOrderedGraph & g, Vertex x, Vertex y, int k, const AbsorberSet & a) -> bool
{
    if (static_cast<int>(a.p_x.size()) != k || static_cast<int>(a.p_y.size()) != k)
        return false;
    auto all = a.vertices();
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    for (auto v : all)
        if (v == x || v == y || v < 0 || v >= g.vertex_count())
            return false;
    auto spans = [&](const std::vector<Vertex> & path, Vertex head, const std::vector<Vertex> & part) {
        return static_cast<int>(path.size()) == k + 1 && is_monotone_path(g, path) && same_set(path, with_front(head, part));
    };
    return spans(a.path_x, x, a.p_x) && spans(a.path_wx, a.w, a.p_x) && spans(a.path_y, y, a.p_y) && spans(a.path_wy, a.w, a.p_y);
}

auto local_absorbers(const EdgeOrderedGraph & g, Vertex x, Vertex y, int k, std::size_t limit) -> std::vector<AbsorberSet>
{
    int n = g.vertex_count();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw Error(ErrorCode::BadVertex, "absorber endpoints must be host vertices");
    if (x == y)
        throw Error(ErrorCode::BadVertex, "absorber endpoints must be distinct");
    if (k < 1)
        throw Error(ErrorCode::BadSize, "absorber path length must be at least 1");

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (v != x && v != y)
            pool.push_back(v);

    std::vector<AbsorberSet> found;
    for_each_subset(pool, 2 * k + 1, [&](const std::vector<Vertex> & a) {
        std::optional<AbsorberSet> witness;
        for (std::size_t wi = 0; wi < a.size() && ! witness; ++wi) {
            std::vector<Vertex> rest;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (i != wi)
                    rest.push_back(a[i]);
            for_each_subset(rest, k, [&](const std::vector<Vertex> & px) {
                std::vector<Vertex> py;
                std::set_difference(rest.begin(), rest.end(), px.begin(), px.end(), std::back_inserter(py));
                auto p1 = spanning_monotone_path(g, with_front(x, px));
                if (! p1) return false;
                auto p2 = spanning_monotone_path(g, with_front(a[wi], px));
                if (! p2) return false;
                auto p3 = spanning_monotone_path(g, with_front(y, py));
                if (! p3) return false;
                auto p4 = spanning_monotone_path(g, with_front(a[wi], py));
                if (! p4) return false;
                witness = AbsorberSet{px, py, a[wi], *p1, *p2, *p3, *p4};
                return true;
            });
        }
        if (witness)
            found.push_back(std::move(*witness));
        return found.size() >= limit;
    });
    return found;
}

namespace
{
    // Smallest-rank-first monotone path on k edges avoiding `taken`.
    auto greedy_path(const EdgeOrderedGraph & g, int k, const std::vector<char> & taken) -> std::optional<std::vector<Vertex>>
    {
        std::vector<Vertex> path;
        std::vector<char> on(g.vertex_count(), 0);
        std::function<bool(Rank, int)> extend = [&](Rank prev, int left) -> bool {
            if (left == 0)
                return true;
            for (auto inc : g.incident(path.back())) {
                if (inc.rank <= prev || taken[inc.other] || on[inc.other])
                    continue;
                on[inc.other] = 1;
                path.push_back(inc.other);
                if (extend(inc.rank, left - 1))
                    return true;
                path.pop_back();
                on[inc.other] = 0;
            }
            return false;
        };
        for (Rank r = 1; r <= g.edge_count(); ++r) {
            auto e = g.edge_at(r);
            if (taken[e.u] || taken[e.v])
                continue;
            for (int flip = 0; flip < 2; ++flip) {
                Vertex a = flip ? e.v : e.u, b = flip ? e.u : e.v;
                path = {a, b};
                on[a] = on[b] = 1;
                if (extend(r, k - 1))
                    return path;
                on[a] = on[b] = 0;
            }
        }
        return std::nullopt;
    }
}

auto tile_dense_paths(const EdgeOrderedGraph & g, int k, const TilerConfig & config) -> DenseTilingResult
{
    check_host_size(g);
    if (k < 1)
        throw Error(ErrorCode::BadSize, "path length must be at least 1");
    if (! (config.eta > 0.0 && config.eta < 0.5))
        throw Error(ErrorCode::BadSpec, "eta must lie in (0, 1/2)");
    int n = g.vertex_count();
    require_divides(k + 1, n, "dense path tiling");

    DenseTilingResult result;
    auto path_graph = monotone_path(k);
    auto finish = [&](std::vector<Embedding> pieces, std::string strategy) {
        auto tiling = make_tiling(std::move(pieces));
        if (! tiling.is_perfect(g) || ! verify_tiling(g, path_graph, tiling))
            throw std::logic_error("dense tiler produced an invalid tiling");
        result.status = SearchStatus::Found;
        result.tiling = std::move(tiling);
        result.strategy = std::move(strategy);
        return result;
    };

    // Reserve: disjoint monotone paths found in a seeded vertex order.
    Rng rng(config.seed);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
        order[v] = v;
    shuffle(order, rng);

    int wanted = std::max(1, static_cast<int>(config.eta * n / (k + 1)));
    wanted = std::min(wanted, n / (k + 1));
    std::vector<char> taken(n, 0);
    std::vector<Embedding> reserve;
    MonotonePathOptions path_options{config.zeta_fraction, true};
    while (static_cast<int>(reserve.size()) < wanted) {
        std::vector<Vertex> free;
        for (auto v : order)
            if (! taken[v])
                free.push_back(v);
        auto sub = subgraph_on(g, free);
        auto p = find_monotone_path(sub, k, path_options);
        if (! p)
            break;
        Embedding e;
        for (auto v : *p) {
            e.map.push_back(free[v]);
            taken[free[v]] = 1;
        }
        reserve.push_back(std::move(e));
    }
    result.reserved = reserve.size();

    // Greedy cover of everything else.
    std::vector<Embedding> greedy;
    while (auto p = greedy_path(g, k, taken)) {
        for (auto v : *p)
            taken[v] = 1;
        greedy.push_back(Embedding{*p});
    }
    result.greedy_pieces = greedy.size();

    std::vector<Vertex> leftovers;
    for (Vertex v = 0; v < n; ++v)
        if (! taken[v])
            leftovers.push_back(v);
    result.leftovers = leftovers.size();

    if (leftovers.empty()) {
        greedy.insert(greedy.end(), reserve.begin(), reserve.end());
        return finish(std::move(greedy), "greedy");
    }

    // Absorb: retile the reserve together with the leftovers.
    std::vector<Vertex> pool = leftovers;
    for (const auto & e : reserve)
        pool.insert(pool.end(), e.map.begin(), e.map.end());
    std::sort(pool.begin(), pool.end());
    auto absorbed = perfect_tiling_exact(subgraph_on(g, pool), path_graph, config.absorb_budget);
    if (absorbed.found()) {
        for (const auto & piece : absorbed.value->pieces)
            greedy.push_back(lift(piece, pool));
        return finish(std::move(greedy), "absorb");
    }

    auto exact = perfect_tiling_exact(g, path_graph, config.absorb_budget);
    if (exact.found())
        return finish(std::move(exact.value->pieces), "exact");
    result.status = exact.status;
    result.strategy = "exact";
    return result;
}

auto tile_via_cliques(const EdgeOrderedGraph & g, const EdgeOrderedGraph & f, int t, const SearchBudget & budget) -> CliqueTilingResult
{
    check_host_size(g);
    int n = g.vertex_count(), size = f.vertex_count();
    if (size == 0)
        throw Error(ErrorCode::BadSize, "cannot tile with the empty graph");
    require_divides(size, n, "clique tiling");
    require_divides(size, t, "clique size");

    CliqueTilingResult result;
    result.degree_condition = min_degree(g) * t >= (t - 1) * n;
    if (! result.degree_condition)
        result.warning = "minimum degree " + std::to_string(min_degree(g)) + " is below (1 - 1/" + std::to_string(t) + ")n";

    // t-cliques whose own ordering f tiles, with that tiling kept.
    std::vector<Mask> cliques;
    std::vector<std::vector<Vertex>> clique_vertices;
    std::vector<Tiling> clique_tilings;
    bool inconclusive = false;
    std::vector<Vertex> current;
    std::function<void(Vertex)> grow = [&](Vertex from) {
        if (static_cast<int>(current.size()) == t) {
            auto tiling = perfect_tiling_exact(subgraph_on(g, current), f, budget);
            if (tiling.inconclusive())
                inconclusive = true;
            if (tiling.found()) {
                cliques.push_back(mask_of(current));
                clique_vertices.push_back(current);
                clique_tilings.push_back(std::move(*tiling.value));
            }
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            if (! std::all_of(current.begin(), current.end(), [&](Vertex u) { return g.has_edge(u, v); }))
                continue;
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(0);

    auto copies = copies_by_vertex_set(f, g, budget);
    if (! copies.complete)
        inconclusive = true;

    int strip = (n % t) / size;
    Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
    MaskCover cover(n, cliques, budget);
    std::vector<std::size_t> stripped;

    std::function<bool(std::size_t, Mask)> choose = [&](std::size_t from, Mask used) -> bool {
        if (static_cast<int>(stripped.size()) == strip) {
            auto status = cover.solve(all, used);
            if (status == SearchStatus::Inconclusive)
                inconclusive = true;
            return status == SearchStatus::Found;
        }
        for (std::size_t i = from; i < copies.masks.size(); ++i) {
            if (copies.masks[i] & used)
                continue;
            stripped.push_back(i);
            if (choose(i + 1, used | copies.masks[i]))
                return true;
            stripped.pop_back();
        }
        return false;
    };

    if (! choose(0, 0)) {
        result.status = inconclusive ? SearchStatus::Inconclusive : SearchStatus::Absent;
        return result;
    }

    std::vector<Embedding> pieces;
    for (auto i : stripped)
        pieces.push_back(copies.embeddings[i]);
    for (auto c : cover.chosen()) {
        result.cliques.push_back(clique_vertices[c]);
        for (const auto & piece : clique_tilings[c].pieces)
            pieces.push_back(lift(piece, clique_vertices[c]));
    }
    result.stripped = stripped.size();
    auto tiling = make_tiling(std::move(pieces));
    if (! tiling.is_perfect(g) || ! verify_tiling(g, f, tiling))
        throw std::logic_error("clique tiler produced an invalid tiling");
    result.status = SearchStatus::Found;
    result.tiling = std::move(tiling);
    return result;
}

auto parse_extremal_kind(const std::string & s) -> ExtremalKind
{
    if (s == "TwoCliques")
        return ExtremalKind::TwoCliques;
    if (s == "Bipartite")
        return ExtremalKind::Bipartite;
    throw Error(ErrorCode::BadSpec, "unknown extremal construction '" + s + "'");
}

auto extremal_construction(ExtremalKind kind, int n, int k, double gamma) -> EdgeOrderedGraph
{
    if (n < 2 || k < 1)
        throw Error(ErrorCode::BadSplit, "extremal construction needs n >= 2 and k >= 1");

    if (kind == ExtremalKind::Bipartite) {
        if (! (gamma > 0.0 && gamma < 1.0))
            throw Error(ErrorCode::BadSplit, "class fraction must lie in (0, 1)");
        int small = static_cast<int>(std::lround(gamma * n));
        if (small < 1 || small >= n)
            throw Error(ErrorCode::BadSplit, "class fraction leaves an empty class");
        std::vector<Edge> edges;
        for (Vertex i = 0; i < small; ++i)
            for (Vertex j = small; j < n; ++j)
                edges.push_back({i, j});
        return EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
    }

    if (n % (k + 1) != 0)
        throw Error(ErrorCode::BadSplit, std::to_string(k + 1) + " does not divide " + std::to_string(n));
    int a = n / 2;
    while (a >= 1 && a % (k + 1) == 0)
        --a;
    if (a < 1)
        throw Error(ErrorCode::BadSplit, "no split of " + std::to_string(n) + " avoids multiples of " + std::to_string(k + 1));
    int b = n - a;

    auto min_edges = [](Vertex offset, int size) {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < size; ++i)
            for (Vertex j = i + 1; j < size; ++j)
                edges.push_back({offset + i, offset + j});
        return edges;
    };
    auto first = min_edges(0, a), second = min_edges(a, b);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < std::max(first.size(), second.size()); ++i) {
        if (i < first.size())
            edges.push_back(first[i]);
        if (i < second.size())
            edges.push_back(second[i]);
    }
    auto g = EdgeOrderedGraph::from_sorted_edges(n, std::move(edges));
    if (min_degree(g) < n / 2 - 2)
        throw std::logic_error("two-clique construction violates its degree bound");
    return g;
}

}
