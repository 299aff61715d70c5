#include <eotile/canonical.hh>

#include <algorithm>
#include <stdexcept>

namespace eotile {

auto all_star_types() -> const std::array<StarType, 20> &
{
    static const std::array<StarType, 20> types = [] {
        std::array<StarType, 20> result{};
        std::size_t i = 0;
        for (auto part : all_canonical_types)
            for (auto family : all_star_families)
                result[i++] = StarType{family, part};
        return result;
    }();
    return types;
}

auto canonical_type_name(CanonicalType t) -> std::string
{
    switch (t) {
        case CanonicalType::Min: return "Min";
        case CanonicalType::Max: return "Max";
        case CanonicalType::InvMin: return "InvMin";
        case CanonicalType::InvMax: return "InvMax";
    }
    return "?";
}

auto star_family_name(StarFamily f) -> std::string
{
    switch (f) {
        case StarFamily::LargerInc: return "LargerInc";
        case StarFamily::LargerDec: return "LargerDec";
        case StarFamily::SmallerInc: return "SmallerInc";
        case StarFamily::SmallerDec: return "SmallerDec";
        case StarFamily::MiddleInc: return "MiddleInc";
    }
    return "?";
}

auto star_type_name(StarType s) -> std::string
{
    return star_family_name(s.family) + " x " + canonical_type_name(s.part);
}

auto parse_canonical_type(const std::string & s) -> CanonicalType
{
    for (auto t : all_canonical_types)
        if (canonical_type_name(t) == s)
            return t;
    throw Error(ErrorCode::BadSpec, "unknown canonical type '" + s + "'");
}

auto parse_star_type(const std::string & s) -> StarType
{
    std::string cleaned;
    for (char c : s)
        if (c != ' ')
            cleaned.push_back(c);
    for (auto f : all_star_families) {
        auto name = star_family_name(f);
        if (cleaned.compare(0, name.size(), name) != 0)
            continue;
        auto rest = cleaned.substr(name.size());
        if (rest.empty() || (rest[0] != 'x' && rest[0] != '*' && rest[0] != ':'))
            throw Error(ErrorCode::BadSpec, "star type '" + s + "' needs family and part");
        return StarType{f, parse_canonical_type(rest.substr(1))};
    }
    throw Error(ErrorCode::BadSpec, "unknown star family in '" + s + "'");
}

auto canonical_label(CanonicalType t, int n, int i, int j) -> Label
{
    Label N = n, I = i, J = j;
    switch (t) {
        case CanonicalType::Min: return 2 * N * I + J - 1;
        case CanonicalType::Max: return (2 * N - 1) * J + I;
        case CanonicalType::InvMin: return (2 * N + 1) * I - J;
        case CanonicalType::InvMax: return 2 * N * J - I + N;
    }
    throw std::logic_error("bad canonical type");
}

auto canonical_labels(CanonicalType t, int n) -> std::vector<LabeledEdge>
{
    if (n < 2)
        throw Error(ErrorCode::BadSize, "canonical clique needs n >= 2, got " + std::to_string(n));
    std::vector<LabeledEdge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.push_back({i - 1, j - 1, canonical_label(t, n, i, j)});
    return edges;
}

auto canonical_clique(CanonicalType t, int n) -> EdgeOrderedGraph
{
    return build_graph(n, canonical_labels(t, n));
}

namespace
{
    auto part_extremes(CanonicalType t, int n) -> std::pair<Label, Label>
    {
        Label lo = canonical_label(t, n, 1, 2), hi = lo;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                lo = std::min(lo, canonical_label(t, n, i, j));
                hi = std::max(hi, canonical_label(t, n, i, j));
            }
        return {lo, hi};
    }
}

auto star_label(StarType s, int n, int i) -> Label
{
    auto [lo, hi] = part_extremes(s.part, n);
    switch (s.family) {
        case StarFamily::LargerInc: return hi + i;
        case StarFamily::LargerDec: return hi + n + 1 - i;
        case StarFamily::SmallerInc: return lo - (n + 1 - i);
        case StarFamily::SmallerDec: return lo - i;
        case StarFamily::MiddleInc: return 2 * Label(n) * i;
    }
    throw std::logic_error("bad star family");
}

auto star_canonical_labels(StarType s, int size) -> std::vector<LabeledEdge>
{
    if (size < 3)
        throw Error(ErrorCode::BadSize, "star-canonical clique needs size >= 3, got " + std::to_string(size));
    int n = size - 1;
    std::vector<LabeledEdge> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({0, i, star_label(s, n, i)});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.push_back({i, j, canonical_label(s.part, n, i, j)});
    return edges;
}

auto star_canonical_clique(StarType s, int size) -> StarClique
{
    return StarClique{build_graph(size, star_canonical_labels(s, size)), 0};
}

auto classify_star_canonical(const EdgeOrderedGraph & g) -> std::vector<StarClassification>
{
    if (! is_complete(g))
        throw Error(ErrorCode::NotComplete, "classification needs a complete graph");
    std::vector<StarClassification> result;
    if (g.vertex_count() < 3)
        return result;

    for (auto type : all_star_types()) {
        auto gen = star_canonical_clique(type, g.vertex_count());
        // Edge-ordered cliques on three or more vertices have no nontrivial
        // automorphisms, so the isomorphism found here is the only one.
        if (auto iso = are_order_isomorphic(gen.graph, g)) {
            StarClassification c{type, iso->vertex_map[0], {}};
            c.order.assign(iso->vertex_map.begin() + 1, iso->vertex_map.end());
            result.push_back(std::move(c));
        }
    }
    return result;
}

auto is_increasing_cycle(const EdgeOrderedGraph & g, const std::vector<Vertex> & cycle) -> bool
{
    if (cycle.size() < 3)
        return false;
    Rank prev = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Rank r = g.rank(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (r == 0 || r <= prev)
            return false;
        prev = r;
    }
    return true;
}

auto monotone_hamilton_cycle(StarType s, int size) -> std::vector<Vertex>
{
    if (size < 5 || size % 2 == 0)
        throw Error(ErrorCode::BadSize, "monotone Hamilton cycle needs odd size >= 5, got " + std::to_string(size));
    int n = size - 1;
    auto v = [](int i) -> Vertex { return i; };
    const Vertex x = 0;

    std::vector<Vertex> seq;
    auto ordinary = [&] {
        for (int i = 1; i <= n; ++i)
            seq.push_back(v(i));
    };

    if (s.family == StarFamily::LargerDec || s.family == StarFamily::SmallerDec) {
        ordinary();
        seq.push_back(x);
    }
    else if (s.part == CanonicalType::Min || s.part == CanonicalType::Max) {
        if (s.family == StarFamily::MiddleInc) {
            seq.push_back(x);
            ordinary();
        }
        else {
            // jumpy path v_{n/2+1} v_1 v_{n/2+2} v_2 ... v_n v_{n/2}, closed through x
            for (int i = 1; i <= n / 2; ++i) {
                seq.push_back(v(n / 2 + i));
                seq.push_back(v(i));
            }
            seq.push_back(x);
        }
    }
    else if (s.part == CanonicalType::InvMin) {
        // big path v_n v_1 ... v_{n-1}, closed through x
        seq.push_back(v(n));
        for (int i = 1; i < n; ++i)
            seq.push_back(v(i));
        seq.push_back(x);
    }
    else {
        // small path v_2 ... v_n v_1, closed through x
        for (int i = 2; i <= n; ++i)
            seq.push_back(v(i));
        seq.push_back(v(1));
        seq.push_back(x);
    }

    auto g = star_canonical_clique(s, size).graph;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < seq.size(); ++shift) {
            std::vector<Vertex> rotated(seq.size());
            for (std::size_t i = 0; i < seq.size(); ++i)
                rotated[i] = seq[(shift + i) % seq.size()];
            if (is_increasing_cycle(g, rotated))
                return rotated;
        }
        std::reverse(seq.begin(), seq.end());
    }
    throw std::logic_error("constructed cycle for " + star_type_name(s) + " is not monotone");
}

}
