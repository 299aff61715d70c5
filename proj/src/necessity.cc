#include <eotile/necessity.hh>

#include <algorithm>

namespace eotile {

auto known_necessary_types() -> const std::array<StarType, 8> &
{
    using enum StarFamily;
    using enum CanonicalType;
    static const std::array<StarType, 8> types{{
        {SmallerInc, Min}, {SmallerDec, Min}, {SmallerInc, InvMin}, {SmallerDec, InvMin},
        {LargerInc, Max}, {LargerDec, Max}, {LargerInc, InvMax}, {LargerDec, InvMax},
    }};
    return types;
}

auto canonical_coincident_types() -> const std::array<StarType, 4> &
{
    using enum StarFamily;
    using enum CanonicalType;
    static const std::array<StarType, 4> types{{
        {SmallerInc, Min}, {LargerInc, Max}, {SmallerDec, InvMin}, {LargerDec, InvMax},
    }};
    return types;
}

auto graph_catalog(const CatalogLimits & limits) -> std::vector<EdgeOrderedGraph>
{
    if (limits.f_max < 1)
        throw Error(ErrorCode::BadSize, "catalog needs f_max >= 1");

    std::vector<std::pair<CanonicalCode, EdgeOrderedGraph>> found;
    for (int f = 1; f <= limits.f_max; ++f) {
        std::vector<Edge> pairs;
        for (Vertex i = 0; i < f; ++i)
            for (Vertex j = i + 1; j < f; ++j)
                pairs.push_back({i, j});
        if (pairs.size() >= 63)
            throw Error(ErrorCode::BudgetExceeded, "catalog size out of range");

        std::map<CanonicalCode, EdgeOrderedGraph> classes;
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
            std::vector<Edge> chosen;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (subset >> i & 1)
                    chosen.push_back(pairs[i]);
            if (static_cast<int>(chosen.size()) > limits.edge_cap)
                continue;
            auto underlying = EdgeOrderedGraph::from_sorted_edges(f, chosen);
            for (auto & g : enumerate_orderings(underlying, limits.enumeration_budget)) {
                auto code = canonical_code(g);
                classes.emplace(std::move(code), std::move(g));
            }
        }
        for (auto & [code, g] : classes)
            found.emplace_back(code, std::move(g));
    }

    std::stable_sort(found.begin(), found.end(), [](const auto & a, const auto & b) {
        if (a.second.vertex_count() != b.second.vertex_count())
            return a.second.vertex_count() < b.second.vertex_count();
        if (a.second.edge_count() != b.second.edge_count())
            return a.second.edge_count() < b.second.edge_count();
        return a.first < b.first;
    });
    std::vector<EdgeOrderedGraph> result;
    for (auto & [code, g] : found)
        result.push_back(std::move(g));
    return result;
}

namespace
{
    // Per-type outcome for one graph against the star-canonical K_f.
    auto check_type(const EdgeOrderedGraph & f, StarType type, const SearchBudget & budget) -> SearchResult<Embedding>
    {
        return find_embedding(f, star_canonical_clique(type, f.vertex_count()).graph, budget);
    }

    auto contains(const std::vector<StarType> & types, StarType t) -> bool
    {
        return std::find(types.begin(), types.end(), t) != types.end();
    }
}

auto necessity_witness(StarType target, const CatalogLimits & limits, const SearchBudget & budget) -> NecessityReport
{
    if (limits.f_max < 2)
        throw Error(ErrorCode::BadSize, "necessity scan needs f_max >= 2");
    NecessityReport report{target, std::nullopt, limits.f_max, limits.edge_cap, {}, false, 0, 0};

    for (const auto & g : graph_catalog(limits)) {
        ++report.scanned;
        if (g.vertex_count() < 3)
            continue;
        auto own = check_type(g, target, budget);
        if (own.inconclusive()) {
            ++report.inconclusive;
            continue;
        }
        if (own.found())
            continue;

        std::map<StarType, Embedding> certs;
        bool all = true, undecided = false;
        for (auto type : all_star_types()) {
            if (type == target)
                continue;
            auto r = check_type(g, type, budget);
            if (r.found())
                certs.emplace(type, std::move(*r.value));
            else {
                all = false;
                undecided = r.inconclusive();
                break;
            }
        }
        if (undecided)
            ++report.inconclusive;
        if (all) {
            report.witness = g;
            report.certificates = std::move(certs);
            report.refutation = true;
            return report;
        }
    }
    return report;
}

auto sufficiency_probe(const std::vector<StarType> & subset, const CatalogLimits & limits, const SearchBudget & budget)
    -> SufficiencyReport
{
    if (limits.f_max < 2)
        throw Error(ErrorCode::BadSize, "sufficiency probe needs f_max >= 2");
    SufficiencyReport report;
    for (auto t : all_star_types())
        if (contains(subset, t) && ! contains(report.subset, t))
            report.subset.push_back(t);
    if (report.subset.size() != subset.size())
        throw Error(ErrorCode::BadSpec, "subset lists a type twice");
    report.f_searched = limits.f_max;
    report.edge_cap = limits.edge_cap;

    for (const auto & g : graph_catalog(limits)) {
        ++report.scanned;
        if (g.vertex_count() < 3)
            continue;

        std::map<StarType, Embedding> certs;
        bool passes = true, undecided = false;
        for (auto type : report.subset) {
            auto r = check_type(g, type, budget);
            if (r.found())
                certs.emplace(type, std::move(*r.value));
            else {
                passes = false;
                undecided = r.inconclusive();
                break;
            }
        }
        if (! passes) {
            report.inconclusive += undecided;
            continue;
        }

        for (auto type : all_star_types()) {
            if (contains(report.subset, type))
                continue;
            auto r = check_type(g, type, budget);
            if (r.inconclusive()) {
                undecided = true;
                continue;
            }
            if (r.absent()) {
                report.counterexample = g;
                report.failing = type;
                report.certificates = std::move(certs);
                return report;
            }
        }
        report.inconclusive += undecided;
    }
    return report;
}

auto verify_report(const NecessityReport & report) -> bool
{
    if (! report.witness)
        return report.certificates.empty();
    const auto & g = *report.witness;
    if (report.certificates.size() != 19 || report.certificates.contains(report.target))
        return false;
    for (const auto & [type, e] : report.certificates)
        if (! is_embedding(g, star_canonical_clique(type, g.vertex_count()).graph, e))
            return false;
    return check_type(g, report.target, default_budget()).absent();
}

auto verify_report(const SufficiencyReport & report) -> bool
{
    if (! report.counterexample)
        return report.certificates.empty() && ! report.failing;
    const auto & g = *report.counterexample;
    if (! report.failing || contains(report.subset, *report.failing))
        return false;
    if (report.certificates.size() != report.subset.size())
        return false;
    for (auto type : report.subset) {
        auto it = report.certificates.find(type);
        if (it == report.certificates.end() || ! is_embedding(g, star_canonical_clique(type, g.vertex_count()).graph, it->second))
            return false;
    }
    return check_type(g, *report.failing, default_budget()).absent();
}

}
