#ifndef EOTILE_TESTS_ORACLES_HH
#define EOTILE_TESTS_ORACLES_HH

// Brute-force reference implementations. They only read graphs through
// vertex_count / edges / rank and share no search code with the library.

#include <eotile/graph.hh>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using eotile::EdgeOrderedGraph;
using eotile::Vertex;

/// Every pair of source edges keeps its relative order, edges map to edges.
inline auto is_embedding(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h, const std::vector<Vertex> & map) -> bool
{
    if (static_cast<int>(map.size()) != f.vertex_count())
        return false;
    std::set<Vertex> image(map.begin(), map.end());
    if (image.size() != map.size())
        return false;
    for (auto v : map)
        if (v < 0 || v >= h.vertex_count())
            return false;
    const auto & es = f.edges();
    for (std::size_t a = 0; a < es.size(); ++a) {
        int ra = h.rank(map[es[a].u], map[es[a].v]);
        if (ra == 0)
            return false;
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            int rb = h.rank(map[es[b].u], map[es[b].v]);
            if (rb == 0 || ! (ra < rb))
                return false;
        }
    }
    return true;
}

/// All injective maps V(f) -> V(h) that are embeddings.
inline auto embeddings(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> map;
    std::vector<char> used(h.vertex_count(), 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(map.size()) == f.vertex_count()) {
            if (is_embedding(f, h, map))
                out.push_back(map);
            return;
        }
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            if (used[v])
                continue;
            used[v] = 1;
            map.push_back(v);
            rec();
            map.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return out;
}

inline auto embeds(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h) -> bool
{
    return ! embeddings(f, h).empty();
}

inline auto copy_count(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h) -> std::size_t
{
    // A copy is determined by its image edge set (plus isolated images).
    std::set<std::pair<std::set<std::pair<Vertex, Vertex>>, std::set<Vertex>>> copies;
    for (const auto & map : embeddings(f, h)) {
        std::set<std::pair<Vertex, Vertex>> es;
        for (auto e : f.edges())
            es.insert(std::minmax(map[e.u], map[e.v]));
        copies.insert({es, std::set<Vertex>(map.begin(), map.end())});
    }
    return copies.size();
}

/// Order-isomorphism by trying every bijection.
inline auto isomorphic(const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) -> bool
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int r = 1; r <= a.edge_count() && ok; ++r) {
            auto e = a.edge_at(r);
            ok = b.rank(perm[e.u], perm[e.v]) == r;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Representatives of the order-isomorphism classes among `graphs`.
inline auto classes(const std::vector<EdgeOrderedGraph> & graphs) -> std::vector<EdgeOrderedGraph>
{
    auto key = [](const EdgeOrderedGraph & g) {
        std::vector<int> profile{g.vertex_count(), g.edge_count()};
        std::vector<int> deg;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            deg.push_back(g.degree(v));
        std::sort(deg.begin(), deg.end());
        profile.insert(profile.end(), deg.begin(), deg.end());
        // degrees of the endpoints of each rank, unordered
        for (int r = 1; r <= g.edge_count(); ++r) {
            auto [lo, hi] = std::minmax(g.degree(g.edge_at(r).u), g.degree(g.edge_at(r).v));
            profile.push_back(lo * 100 + hi);
        }
        return profile;
    };
    std::map<std::vector<int>, std::vector<EdgeOrderedGraph>> buckets;
    std::vector<EdgeOrderedGraph> reps;
    for (const auto & g : graphs) {
        auto & bucket = buckets[key(g)];
        if (std::none_of(bucket.begin(), bucket.end(), [&](const EdgeOrderedGraph & r) { return isomorphic(r, g); })) {
            bucket.push_back(g);
            reps.push_back(g);
        }
    }
    return reps;
}

/// Every assignment of ranks 1..m to the edges of h.
inline auto all_orderings(const EdgeOrderedGraph & h) -> std::vector<EdgeOrderedGraph>
{
    std::vector<int> ranks(h.edge_count());
    std::iota(ranks.begin(), ranks.end(), 1);
    std::vector<EdgeOrderedGraph> out;
    do {
        std::vector<eotile::LabeledEdge> es;
        for (std::size_t i = 0; i < ranks.size(); ++i)
            es.push_back({h.edges()[i].u, h.edges()[i].v, ranks[i]});
        out.push_back(eotile::build_graph(h.vertex_count(), es));
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return out;
}

/// Every edge-ordered graph on 1..f_max vertices, one per class.
inline auto catalog(int f_max) -> std::vector<EdgeOrderedGraph>
{
    std::vector<EdgeOrderedGraph> all;
    for (int f = 1; f <= f_max; ++f) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex i = 0; i < f; ++i)
            for (Vertex j = i + 1; j < f; ++j)
                pairs.push_back({i, j});
        for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
            std::vector<eotile::LabeledEdge> es;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (s >> i & 1)
                    es.push_back({pairs[i].first, pairs[i].second, static_cast<int>(es.size() + 1)});
            auto base = eotile::build_graph(f, es);
            for (auto & g : all_orderings(base))
                all.push_back(std::move(g));
        }
    }
    return classes(all);
}

/// Standard labels computed straight from the formulas, 1-based i < j.
inline auto label(int type, long long n, long long i, long long j) -> long long
{
    switch (type) {
        case 0: return 2 * n * i + j - 1;
        case 1: return (2 * n - 1) * j + i;
        case 2: return (2 * n + 1) * i - j;
        default: return 2 * n * j - i + n;
    }
}

/// Labels of x v_i (i = 1..n) for a star family over canonical part `type`:
/// 0 larger inc, 1 larger dec, 2 smaller inc, 3 smaller dec, 4 middle inc.
inline auto star_labels(int family, int type, long long n) -> std::vector<long long>
{
    long long lo = LLONG_MAX, hi = LLONG_MIN;
    for (long long i = 1; i <= n; ++i)
        for (long long j = i + 1; j <= n; ++j) {
            lo = std::min(lo, label(type, n, i, j));
            hi = std::max(hi, label(type, n, i, j));
        }
    std::vector<long long> xs;
    for (long long i = 1; i <= n; ++i) {
        switch (family) {
            case 0: xs.push_back(hi + i); break;
            case 1: xs.push_back(hi + n + 1 - i); break;
            case 2: xs.push_back(lo - (n + 1 - i)); break;
            case 3: xs.push_back(lo - i); break;
            default: xs.push_back(2 * n * i); break;
        }
    }
    return xs;
}

/// Star-canonical K_{n+1} from the oracle labels; vertex 0 is x.
inline auto star_clique(int family, int type, int size) -> EdgeOrderedGraph
{
    int n = size - 1;
    auto xs = star_labels(family, type, n);
    std::vector<std::pair<long long, std::pair<Vertex, Vertex>>> labelled;
    for (int i = 1; i <= n; ++i)
        labelled.push_back({xs[i - 1], {0, i}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            labelled.push_back({label(type, n, i, j), {i, j}});
    std::sort(labelled.begin(), labelled.end());
    std::vector<eotile::LabeledEdge> es;
    for (std::size_t r = 0; r < labelled.size(); ++r)
        es.push_back({labelled[r].second.first, labelled[r].second.second, static_cast<int>(r + 1)});
    return eotile::build_graph(size, es);
}

inline auto canonical(int type, int n) -> EdgeOrderedGraph
{
    std::vector<std::pair<long long, std::pair<Vertex, Vertex>>> labelled;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            labelled.push_back({label(type, n, i, j), {i - 1, j - 1}});
    std::sort(labelled.begin(), labelled.end());
    std::vector<eotile::LabeledEdge> es;
    for (std::size_t r = 0; r < labelled.size(); ++r)
        es.push_back({labelled[r].second.first, labelled[r].second.second, static_cast<int>(r + 1)});
    return eotile::build_graph(n, es);
}

/// Turánable / tileable straight from the definitions via brute-force embedding.
inline auto turanable(const EdgeOrderedGraph & f) -> bool
{
    if (f.vertex_count() <= 1 || f.edge_count() == 0)
        return true;
    for (int t = 0; t < 4; ++t)
        if (! embeds(f, canonical(t, f.vertex_count())))
            return false;
    return true;
}

inline auto tileable(const EdgeOrderedGraph & f) -> bool
{
    if (f.vertex_count() <= 2 || f.edge_count() == 0)
        return true;
    for (int fam = 0; fam < 5; ++fam)
        for (int t = 0; t < 4; ++t)
            if (! embeds(f, star_clique(fam, t, f.vertex_count())))
                return false;
    return true;
}

/// Vertex sets of copies of f in h.
inline auto copy_sets(const EdgeOrderedGraph & f, const EdgeOrderedGraph & h) -> std::vector<std::vector<Vertex>>
{
    std::set<std::vector<Vertex>> sets;
    for (auto map : embeddings(f, h)) {
        std::sort(map.begin(), map.end());
        sets.insert(map);
    }
    return {sets.begin(), sets.end()};
}

/// Perfect f-tiling of h by plain exhaustive exact cover.
inline auto has_perfect_tiling(const EdgeOrderedGraph & h, const EdgeOrderedGraph & f) -> bool
{
    if (h.vertex_count() % f.vertex_count() != 0)
        return false;
    auto sets = copy_sets(f, h);
    std::vector<char> covered(h.vertex_count(), 0);
    std::function<bool()> rec = [&] {
        auto it = std::find(covered.begin(), covered.end(), 0);
        if (it == covered.end())
            return true;
        Vertex v = static_cast<Vertex>(it - covered.begin());
        for (const auto & s : sets) {
            if (std::find(s.begin(), s.end(), v) == s.end())
                continue;
            if (std::any_of(s.begin(), s.end(), [&](Vertex u) { return covered[u]; }))
                continue;
            for (auto u : s)
                covered[u] = 1;
            if (rec())
                return true;
            for (auto u : s)
                covered[u] = 0;
        }
        return false;
    };
    return rec();
}

/// Pieces are embeddings, pairwise disjoint, and together cover `expected`.
inline auto is_tiling(const EdgeOrderedGraph & h, const EdgeOrderedGraph & f, const std::vector<std::vector<Vertex>> & pieces,
    std::vector<Vertex> expected) -> bool
{
    std::vector<Vertex> seen;
    for (const auto & p : pieces) {
        if (! is_embedding(f, h, p))
            return false;
        seen.insert(seen.end(), p.begin(), p.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return false;
    std::sort(expected.begin(), expected.end());
    return seen == expected;
}

/// Longest strictly monotone subsequence length by trying every subset.
inline auto longest_monotone(const std::vector<int> & seq) -> std::size_t
{
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << seq.size()); ++s) {
        std::vector<int> pick;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (s >> i & 1)
                pick.push_back(seq[i]);
        bool inc = true, dec = true;
        for (std::size_t i = 1; i < pick.size(); ++i) {
            inc = inc && pick[i - 1] < pick[i];
            dec = dec && pick[i - 1] > pick[i];
        }
        if (inc || dec)
            best = std::max(best, pick.size());
    }
    return best;
}

/// Some vertex order makes ranks increase around the spanning cycle.
inline auto has_monotone_spanning_cycle(const EdgeOrderedGraph & h) -> bool
{
    int n = h.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        int prev = 0;
        for (int i = 0; i < n && ok; ++i) {
            int r = h.rank(perm[i], perm[(i + 1) % n]);
            ok = r > prev;
            prev = r;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}

#endif
