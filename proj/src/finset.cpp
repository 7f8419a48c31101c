#include <cdiag/chains.hpp>
#include <cdiag/finset.hpp>

#include <algorithm>
#include <map>

using std::size_t;
using std::string;
using std::vector;

namespace cdiag {

namespace {

auto power(long long base, int exponent) -> long long
{
    long long r = 1;
    for (int i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

auto function_name(int n, int m, const vector<int> & targets) -> string
{
    string s = "f" + std::to_string(n) + "to" + std::to_string(m) + "_";
    for (size_t i = 0; i < targets.size(); ++i)
        s += (i ? "_" : "") + std::to_string(targets[i]);
    return s;
}

auto keep(FunctionClass variant, const vector<int> & targets, int m) -> bool
{
    vector<int> hits(m, 0);
    for (auto t : targets)
        ++hits[t];
    switch (variant) {
    case FunctionClass::all:
        return true;
    case FunctionClass::injective:
        return std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    case FunctionClass::surjective:
        return std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    }
    return false;
}

struct Skeleton
{
    int max_n = 0;
    vector<vector<long long>> offset; ///< offset[n][m] into dense
    vector<MorphismId> dense;         ///< full function index -> morphism id or -1
    vector<vector<int>> functions;
    vector<int> codomain;

    auto code(int m, const vector<int> & targets) const -> long long
    {
        long long c = 0;
        for (auto t : targets)
            c = c * m + t;
        return c;
    }
};

auto product_of(vector<GroupExpr> factors) -> GroupExpr
{
    if (factors.empty())
        return GroupExpr::trivial();
    if (factors.size() == 1)
        return factors[0];
    return GroupExpr::product(std::move(factors));
}

auto symbolic(const FiberProfile & profile) -> SymbolicComponent
{
    SymbolicComponent c;
    c.profile = profile;
    c.tree = RootedTree2{profile};
    c.group = wreath_group(profile);
    c.order = order(c.group);
    c.orbit_size = factorial(profile.n) * factorial(profile.m) / c.order;
    return c;
}

}

auto to_string(FunctionClass variant) -> string
{
    switch (variant) {
    case FunctionClass::all:
        return "all";
    case FunctionClass::injective:
        return "inj";
    case FunctionClass::surjective:
        return "surj";
    }
    return "?";
}

auto parse_function_class(const string & text) -> FunctionClass
{
    if (text == "all")
        return FunctionClass::all;
    if (text == "inj" || text == "injective")
        return FunctionClass::injective;
    if (text == "surj" || text == "surjective")
        return FunctionClass::surjective;
    throw InvalidArgument("unknown function class '" + text + "' (expected all, inj or surj)");
}

auto finset_skeleton(int max_n, FunctionClass variant, int bound) -> FiniteCategory
{
    if (max_n < 0)
        throw InvalidArgument("max_n must be nonnegative");
    if (max_n > bound)
        throw LimitError("finset_bound", static_cast<size_t>(bound), static_cast<size_t>(max_n));

    auto data = std::make_shared<Skeleton>();
    data->max_n = max_n;
    data->offset.assign(max_n + 1, vector<long long>(max_n + 1, 0));
    long long total = 0;
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            data->offset[n][m] = total;
            total += power(m, n);
        }
    data->dense.assign(total, no_morphism);

    vector<string> objects;
    vector<Morphism> morphisms;
    vector<MorphismId> identities(max_n + 1, no_morphism);
    for (int n = 0; n <= max_n; ++n)
        objects.push_back(std::to_string(n));
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            auto count = power(m, n);
            for (long long c = 0; c < count; ++c) {
                vector<int> targets(n);
                auto rest = c;
                for (int i = n - 1; i >= 0; --i) {
                    targets[i] = static_cast<int>(rest % m);
                    rest /= m;
                }
                if (! keep(variant, targets, m))
                    continue;
                auto id = static_cast<MorphismId>(morphisms.size());
                data->dense[data->offset[n][m] + c] = id;
                morphisms.push_back(Morphism{function_name(n, m, targets), n, m});
                bool is_id = n == m;
                for (int i = 0; i < n && is_id; ++i)
                    is_id = targets[i] == i;
                if (is_id)
                    identities[n] = id;
                data->functions.push_back(std::move(targets));
                data->codomain.push_back(m);
            }
        }

    vector<MorphismId> inverses(morphisms.size(), no_morphism);
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f) {
        auto n = morphisms[f].source;
        if (morphisms[f].target != n)
            continue;
        const auto & t = data->functions[f];
        vector<int> inv(n, -1);
        for (int i = 0; i < n; ++i)
            inv[t[i]] = i;
        if (std::find(inv.begin(), inv.end(), -1) == inv.end())
            inverses[f] = data->dense[data->offset[n][n] + data->code(n, inv)];
    }

    auto compose = [data](MorphismId g, MorphismId f) -> MorphismId {
        const auto & tf = data->functions[f];
        const auto & tg = data->functions[g];
        auto p = data->codomain[g];
        long long c = 0;
        for (auto t : tf)
            c = c * p + tg[t];
        return data->dense[data->offset[static_cast<int>(tf.size())][p] + c];
    };
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto function_of(const FiniteCategory & skeleton, MorphismId f) -> vector<int>
{
    const auto & name = skeleton.morphism(f).name;
    auto underscore = name.find('_');
    if (name.empty() || name[0] != 'f' || underscore == string::npos)
        throw InvalidArgument("morphism " + name + " is not a finset skeleton function");
    vector<int> targets;
    size_t at = underscore + 1;
    while (at < name.size()) {
        auto next = name.find('_', at);
        if (next == string::npos)
            next = name.size();
        targets.push_back(std::stoi(name.substr(at, next - at)));
        at = next + 1;
    }
    if (static_cast<int>(targets.size()) != skeleton.source(f))
        throw InvalidArgument("morphism " + name + " has the wrong arity");
    return targets;
}

auto FiberProfile::is_valid() const -> bool
{
    if (static_cast<int>(k.size()) != n + 1 || n < 0 || m < 0)
        return false;
    int weighted = 0, count = 0;
    for (int i = 0; i <= n; ++i) {
        if (k[i] < 0)
            return false;
        weighted += i * k[i];
        count += k[i];
    }
    return weighted == n && count == m;
}

auto to_string(const FiberProfile & profile) -> string
{
    string s = "(";
    for (size_t i = 0; i < profile.k.size(); ++i)
        s += (i ? "," : "") + std::to_string(profile.k[i]);
    return s + ")";
}

auto profile_of(std::span<const int> targets, int m) -> FiberProfile
{
    FiberProfile p;
    p.n = static_cast<int>(targets.size());
    p.m = m;
    vector<int> fiber(m, 0);
    for (auto t : targets) {
        if (t < 0 || t >= m)
            throw InvalidArgument("function value " + std::to_string(t) + " outside the target set");
        ++fiber[t];
    }
    p.k.assign(p.n + 1, 0);
    for (auto s : fiber)
        ++p.k[s];
    return p;
}

auto enumerate_profiles(int n, int m) -> vector<FiberProfile>
{
    if (n < 0 || m < 0)
        throw InvalidArgument("cardinalities must be nonnegative");
    vector<FiberProfile> result;
    vector<int> k(n + 1, 0);
    auto recurse = [&](auto & self, int i, int points_left, int weight_left) -> void {
        if (i == n) {
            // the last entry is forced by both equations
            if (n == 0) {
                if (weight_left == 0) {
                    k[0] = points_left;
                    result.push_back(FiberProfile{n, m, k});
                }
                return;
            }
            if (weight_left % n == 0 && weight_left / n == points_left) {
                k[n] = points_left;
                result.push_back(FiberProfile{n, m, k});
            }
            return;
        }
        for (int v = 0; v <= points_left && i * v <= weight_left; ++v) {
            k[i] = v;
            self(self, i + 1, points_left - v, weight_left - i * v);
        }
        k[i] = 0;
    };
    recurse(recurse, 0, m, n);
    return result;
}

auto RootedTree2::display() const -> string
{
    string s;
    for (size_t i = 0; i < profile.k.size(); ++i)
        if (profile.k[i] > 0)
            s += (s.empty() ? "" : " u ") + ("G(" + std::to_string(i) + "," + std::to_string(profile.k[i]) + ")");
    return s.empty() ? "G(0,0)" : s;
}

auto RootedTree2::automorphism_group() const -> GroupExpr
{
    return wreath_group(profile);
}

auto wreath_group(const FiberProfile & profile) -> GroupExpr
{
    vector<GroupExpr> factors;
    for (size_t i = 0; i < profile.k.size(); ++i)
        if (profile.k[i] > 0)
            factors.push_back(GroupExpr::wreath(GroupExpr::symmetric(static_cast<int>(i)), profile.k[i]));
    return product_of(std::move(factors));
}

auto closed_form_level1(int n, int m) -> vector<SymbolicComponent>
{
    vector<SymbolicComponent> result;
    for (const auto & p : enumerate_profiles(n, m))
        result.push_back(symbolic(p));
    return result;
}

auto closed_form_level0(int max_n) -> vector<Level0Component>
{
    if (max_n < 0)
        throw InvalidArgument("max_n must be nonnegative");
    vector<Level0Component> result;
    for (int n = 0; n <= max_n; ++n) {
        auto g = GroupExpr::symmetric(n);
        result.push_back(Level0Component{n, g, order(g)});
    }
    return result;
}

auto injective_level1(int n, int m) -> vector<InjectiveComponent>
{
    vector<InjectiveComponent> result;
    if (n < 0 || m < 0)
        throw InvalidArgument("cardinalities must be nonnegative");
    if (n > m)
        return result;
    FiberProfile p{n, m, vector<int>(n + 1, 0)};
    p.k[0] += m - n;
    if (n >= 1)
        p.k[1] += n;
    InjectiveComponent c;
    c.component = symbolic(p);
    c.stated_group = GroupExpr::symmetric(n);
    c.stated_group_agrees = order(c.stated_group) == c.component.order;
    result.push_back(std::move(c));
    return result;
}

auto surjective_level1(int n, int m) -> vector<SymbolicComponent>
{
    vector<SymbolicComponent> result;
    for (const auto & p : enumerate_profiles(n, m)) {
        if (p.k[0] != 0)
            continue;
        auto c = symbolic(p);
        vector<GroupExpr> factors;
        for (int i = 1; i <= n; ++i) {
            if (p.k[i] == 0)
                continue;
            factors.push_back(i == 1 ? GroupExpr::symmetric(p.k[1]) : GroupExpr::wreath(GroupExpr::symmetric(i), p.k[i]));
        }
        c.group = product_of(std::move(factors));
        result.push_back(std::move(c));
    }
    return result;
}

auto oracle_diff_finset(int max_n, FunctionClass variant, const Limits & limits, int bound) -> DiffReport
{
    auto skeleton = finset_skeleton(max_n, variant, bound);
    auto level = orbit_partition(skeleton, 1, limits);

    // observed orbits of each cell keyed by the profile of their representative
    std::map<std::pair<int, int>, std::map<FiberProfile, int>> observed;
    vector<bool> profile_constant(level.orbits.size(), true);
    vector<FiberProfile> orbit_profile;
    for (const auto & o : level.orbits) {
        auto f = o.representative.morphisms[0];
        orbit_profile.push_back(profile_of(function_of(skeleton, f), skeleton.target(f)));
    }
    for (size_t c = 0; c < level.chains.size(); ++c) {
        auto f = level.chains[c].morphisms[0];
        if (profile_of(function_of(skeleton, f), skeleton.target(f)) != orbit_profile[level.orbit_of[c]])
            profile_constant[level.orbit_of[c]] = false;
    }
    for (size_t o = 0; o < level.orbits.size(); ++o) {
        const auto & p = orbit_profile[o];
        observed[{p.n, p.m}].emplace(p, static_cast<int>(o));
    }

    DiffReport report;
    size_t stated_disagreements = 0;
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            vector<SymbolicComponent> expected;
            if (variant == FunctionClass::all)
                expected = closed_form_level1(n, m);
            else if (variant == FunctionClass::surjective)
                expected = surjective_level1(n, m);
            else
                for (auto & c : injective_level1(n, m)) {
                    if (! c.stated_group_agrees)
                        ++stated_disagreements;
                    expected.push_back(std::move(c.component));
                }

            auto & cell = observed[{n, m}];
            for (const auto & e : expected) {
                DiffRow row;
                row.n = n;
                row.m = m;
                row.key = to_string(e.profile);
                row.group_expr = to_string(e.group);
                row.expected_order = e.order;
                auto it = cell.find(e.profile);
                if (it == cell.end()) {
                    row.detail = "no brute-force orbit with this profile";
                    ++report.mismatches;
                    report.problems.push_back("cell (" + std::to_string(n) + "," + std::to_string(m) + "): missing " + row.key);
                    report.rows.push_back(std::move(row));
                    continue;
                }
                const auto & orbit = level.orbits[it->second];
                row.observed_order = orbit.stabilizer.order;
                row.orbit_size = orbit.cell_size;
                row.matches = row.observed_order == row.expected_order && BigInt(orbit.cell_size) == e.orbit_size
                    && profile_constant[it->second];
                if (! profile_constant[it->second])
                    row.detail = "orbit mixes fiber profiles";
                else if (BigInt(orbit.cell_size) != e.orbit_size)
                    row.detail = "orbit size " + std::to_string(orbit.cell_size) + " vs " + e.orbit_size.str();

                if (row.matches && e.order <= limits.iso_limit && orbit.stabilizer.order_confirmed) {
                    row.policy = "isomorphism";
                    auto outcome = are_isomorphic(closure(*orbit.stabilizer.generators, limits.table_limit),
                        materialize(e.group, limits.table_limit), limits.iso_limit);
                    if (outcome != IsoOutcome::isomorphic) {
                        row.matches = false;
                        row.detail = "stabilizer not isomorphic to " + row.group_expr;
                    }
                }
                else
                    row.policy = "order";
                if (! row.matches)
                    ++report.mismatches;
                cell.erase(it);
                report.rows.push_back(std::move(row));
            }
            for (const auto & [profile, o] : cell) {
                ++report.mismatches;
                report.problems.push_back("cell (" + std::to_string(n) + "," + std::to_string(m) + "): unexpected orbit "
                    + to_string(profile) + " (" + describe(skeleton, level.orbits[o].representative) + ")");
            }
        }

    if (variant == FunctionClass::all) {
        size_t failures = 0;
        for (int n = 0; n <= max_n; ++n)
            for (int m = 0; m <= max_n; ++m) {
                BigInt total = 0;
                for (const auto & c : closed_form_level1(n, m))
                    total += c.orbit_size;
                if (total != BigInt(power(m, n)))
                    ++failures;
            }
        report.notes.push_back(DiffNote{"counting identity", failures == 0 ? "pass" : "fail",
            "sum over profiles of |S_n x S_m| / |group| equals m^n for all n, m <= " + std::to_string(max_n)});
        if (failures)
            report.mismatches += failures;
    }
    if (variant == FunctionClass::injective)
        report.notes.push_back(DiffNote{"stated group S_n", stated_disagreements == 0 ? "pass" : "note",
            std::to_string(stated_disagreements) + " cells where S_n differs in order from the stabilizer S_n x S_(m-n)"});
    bool empty_source_ok = std::all_of(report.rows.begin(), report.rows.end(), [](const DiffRow & r) { return r.n != 0 || r.matches; });
    report.notes.push_back(DiffNote{"S0 convention", empty_source_ok ? "pass" : "fail",
        "order(S0) = 1, so S0 wr S_k has order k!; checked on the cells with empty source"});
    return report;
}

}
