#include <cdiag/chains.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>

#include <algorithm>

using std::size_t;
using std::vector;

namespace cdiag {

auto automorphism_table(const FiniteCategory & cat, ObjectId x) -> CayleyTable
{
    vector<Word> elements;
    for (auto a : cat.automorphisms(x))
        elements.push_back({a});
    return table_of(elements, [&](const Word & g, const Word & f) { return Word{cat.compose_unchecked(g[0], f[0])}; });
}

auto match_groups(const vector<CayleyTable> & a, const vector<CayleyTable> & b, size_t iso_limit, size_t & order_only) -> bool
{
    order_only = 0;
    if (a.size() != b.size())
        return false;
    auto n = a.size();
    vector<vector<int>> edges(n);
    vector<vector<bool>> by_order(n, vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto outcome = are_isomorphic(a[i], b[j], iso_limit);
            if (outcome == IsoOutcome::isomorphic || outcome == IsoOutcome::undecided) {
                edges[i].push_back(static_cast<int>(j));
                by_order[i][j] = outcome == IsoOutcome::undecided;
            }
        }

    vector<int> partner(n, -1);
    auto augment = [&](auto & self, size_t i, vector<bool> & seen) -> bool {
        for (auto j : edges[i]) {
            if (seen[j])
                continue;
            seen[j] = true;
            if (partner[j] == -1 || self(self, static_cast<size_t>(partner[j]), seen)) {
                partner[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < n; ++i) {
        vector<bool> seen(n, false);
        if (! augment(augment, i, seen))
            return false;
    }
    for (size_t j = 0; j < n; ++j)
        if (by_order[partner[j]][j])
            ++order_only;
    return true;
}

auto skeletal_invariants(const FiniteCategory & cat) -> CategoryInvariants
{
    CategoryInvariants inv;
    auto classes = iso_classes_of_objects(cat);
    inv.class_count = static_cast<int>(classes.size());
    for (const auto & c : classes)
        inv.aut_orders.push_back(cat.automorphisms(c.representative.objects[0]).size());
    std::sort(inv.aut_orders.begin(), inv.aut_orders.end());
    return inv;
}

auto check_equivalence_invariants(const FiniteCategory & a, const FiniteCategory & b, size_t iso_limit) -> EquivalenceReport
{
    EquivalenceReport report;
    report.first = skeletal_invariants(a);
    report.second = skeletal_invariants(b);
    report.class_count_matches = report.first.class_count == report.second.class_count;
    report.aut_orders_match = report.first.aut_orders == report.second.aut_orders;
    if (! (report.class_count_matches && report.aut_orders_match)) {
        report.policy = "invariants differ";
        return report;
    }

    auto tables = [&](const FiniteCategory & cat) {
        vector<CayleyTable> result;
        for (const auto & c : iso_classes_of_objects(cat))
            result.push_back(automorphism_table(cat, c.representative.objects[0]));
        return result;
    };
    size_t order_only = 0;
    report.aut_groups_match = match_groups(tables(a), tables(b), iso_limit, order_only);
    report.policy = order_only == 0 ? "isomorphism" : "isomorphism, order only for " + std::to_string(order_only) + " classes";
    return report;
}

}
