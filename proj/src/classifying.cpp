#include <cdiag/classifying.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

using std::size_t;
using std::string;
using std::vector;

namespace cdiag {

namespace {

auto decomposition_of(const FiniteCategory & cat, LevelOrbits level, const Limits & limits) -> Decomposition
{
    Decomposition d;
    d.level = level.level;
    d.chain_count = level.chains.size();
    for (auto & orbit : level.orbits) {
        Component c;
        c.orbit = std::move(orbit);
        const auto & stab = c.orbit.stabilizer;
        if (stab.order_confirmed && stab.order <= limits.iso_limit) {
            auto table = closure(*stab.generators, limits.table_limit);
            c.named = identify_named(table);
            c.policy = "isomorphism";
        }
        else
            c.policy = "order";
        d.components.push_back(std::move(c));
    }
    (void)cat;
    return d;
}

struct ChainIndex
{
    std::map<vector<int>, int> index;

    explicit ChainIndex(const vector<Chain> & chains)
    {
        for (size_t c = 0; c < chains.size(); ++c)
            index.emplace(chains[c].key(), static_cast<int>(c));
    }

    auto at(const Chain & chain) const -> int
    {
        auto it = index.find(chain.key());
        if (it == index.end())
            throw EngineError("simplex missing from its level");
        return it->second;
    }
};

auto face(const FiniteCategory & cat, const Chain & c, int i) -> Chain
{
    auto n = c.level();
    if (n == 1)
        return object_chain(i == 0 ? c.objects[1] : c.objects[0]);
    vector<MorphismId> fs = c.morphisms;
    if (i == 0)
        fs.erase(fs.begin());
    else if (i == n)
        fs.pop_back();
    else {
        fs[i - 1] = cat.compose_unchecked(fs[i], fs[i - 1]);
        fs.erase(fs.begin() + i);
    }
    return make_chain(cat, std::move(fs));
}

auto degeneracy(const FiniteCategory & cat, const Chain & c, int j) -> Chain
{
    vector<MorphismId> fs = c.morphisms;
    fs.insert(fs.begin() + j, cat.identity(c.objects[j]));
    return make_chain(cat, std::move(fs));
}

auto is_identity(const FiniteCategory & cat, MorphismId f) -> bool
{
    return cat.source(f) == cat.target(f) && cat.identity(cat.source(f)) == f;
}

}

auto Component::group_text() const -> string
{
    if (named)
        return to_string(*named);
    return "order " + orbit.stabilizer.order.str() + " (" + std::to_string(orbit.stabilizer.generators->generators.size())
        + " generators)";
}

auto level_decomposition(const FiniteCategory & cat, int n, const Limits & limits) -> Decomposition
{
    return decomposition_of(cat, orbit_partition(cat, n, limits), limits);
}

auto segal_check(const FiniteCategory & cat, int n, const Limits & limits) -> SegalReport
{
    if (n < 2)
        throw InvalidArgument("the Segal map is checked for n >= 2");
    SegalReport report;
    report.level = n;
    auto chains = enumerate_chains(cat, n, limits.chain_limit);
    report.chain_count = chains.size();

    // paths of n level-1 chains glued along level-0 objects, counted by endpoint
    vector<size_t> ending(cat.object_count(), 0);
    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        ++ending[cat.target(f)];
    for (int step = 1; step < n; ++step) {
        vector<size_t> next(cat.object_count(), 0);
        for (MorphismId f = 0; f < cat.morphism_count(); ++f)
            next[cat.target(f)] += ending[cat.source(f)];
        ending = std::move(next);
    }
    for (auto c : ending)
        report.fiber_product_count += c;

    std::set<vector<MorphismId>> images;
    bool ok = true;
    for (const auto & chain : chains) {
        vector<Chain> segments;
        for (auto f : chain.morphisms)
            segments.push_back(make_chain(cat, {f}));
        for (size_t i = 1; i < segments.size(); ++i)
            if (segments[i - 1].objects[1] != segments[i].objects[0])
                ok = false;
        vector<MorphismId> glued;
        for (const auto & s : segments)
            glued.push_back(s.morphisms[0]);
        if (make_chain(cat, glued) != chain)
            ok = false;
        if (! images.insert(glued).second)
            ok = false;
    }
    report.bijection_verified = ok && images.size() == report.fiber_product_count;
    return report;
}

auto interval_groupoid(const FiniteCategory & cat, size_t morphism_limit) -> FiniteCategory
{
    // objects: isomorphisms f (paired with their inverse g)
    vector<MorphismId> isos;
    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        if (cat.is_iso(f))
            isos.push_back(f);

    vector<string> objects;
    for (auto f : isos)
        objects.push_back("p_" + cat.morphism(f).name);

    struct Pair
    {
        MorphismId alpha;
        MorphismId beta;
    };
    vector<Morphism> morphisms;
    vector<Pair> pairs;
    vector<MorphismId> identities(isos.size(), no_morphism);
    auto key = [&](MorphismId a, MorphismId b) { return static_cast<long long>(a) * cat.morphism_count() + b; };
    std::unordered_map<long long, MorphismId> lookup;

    for (size_t s = 0; s < isos.size(); ++s) {
        auto f = isos[s];
        auto g = cat.inverse(f);
        for (size_t t = 0; t < isos.size(); ++t) {
            auto f2 = isos[t];
            auto g2 = cat.inverse(f2);
            for (auto alpha : cat.isos_from(cat.source(f))) {
                if (cat.target(alpha) != cat.source(f2))
                    continue;
                for (auto beta : cat.isos_from(cat.target(f))) {
                    if (cat.target(beta) != cat.target(f2))
                        continue;
                    if (cat.compose_unchecked(beta, f) != cat.compose_unchecked(f2, alpha)
                        || cat.compose_unchecked(alpha, g) != cat.compose_unchecked(g2, beta))
                        continue;
                    auto id = static_cast<MorphismId>(morphisms.size());
                    morphisms.push_back(Morphism{cat.morphism(alpha).name + "__" + cat.morphism(beta).name,
                        static_cast<ObjectId>(s), static_cast<ObjectId>(t)});
                    pairs.push_back({alpha, beta});
                    lookup.emplace(key(alpha, beta), id);
                    if (s == t && is_identity(cat, alpha) && is_identity(cat, beta))
                        identities[s] = id;
                    if (morphisms.size() > morphism_limit)
                        throw LimitError("chain_limit", morphism_limit, morphisms.size());
                }
            }
        }
    }

    vector<MorphismId> inverses;
    for (const auto & p : pairs)
        inverses.push_back(lookup.at(key(cat.inverse(p.alpha), cat.inverse(p.beta))));

    auto shared_pairs = std::make_shared<const vector<Pair>>(std::move(pairs));
    auto shared_lookup = std::make_shared<const std::unordered_map<long long, MorphismId>>(std::move(lookup));
    auto compose = [cat, shared_pairs, shared_lookup](MorphismId second, MorphismId first) -> MorphismId {
        const auto & p = *shared_pairs;
        auto a = cat.compose_unchecked(p[second].alpha, p[first].alpha);
        auto b = cat.compose_unchecked(p[second].beta, p[first].beta);
        auto it = shared_lookup->find(static_cast<long long>(a) * cat.morphism_count() + b);
        return it == shared_lookup->end() ? no_morphism : it->second;
    };
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto completeness_check(const FiniteCategory & cat, const Limits & limits) -> CompletenessReport
{
    CompletenessReport report;
    auto interval = interval_groupoid(cat, limits.chain_limit);

    auto summarize = [&](const FiniteCategory & c, vector<ClassSummary> & out, vector<CayleyTable> & tables) {
        for (const auto & orbit : iso_classes_of_objects(c, limits)) {
            auto x = orbit.representative.objects[0];
            out.push_back(ClassSummary{c.object_name(x), orbit.orbit_size, c.automorphisms(x).size()});
            tables.push_back(automorphism_table(c, x));
        }
    };
    vector<CayleyTable> mine, theirs;
    summarize(cat, report.iso_classes, mine);
    summarize(interval, report.interval_classes, theirs);

    report.class_counts_match = report.iso_classes.size() == report.interval_classes.size();
    auto orders = [](const vector<ClassSummary> & classes) {
        vector<size_t> r;
        for (const auto & c : classes)
            r.push_back(c.aut_order);
        std::sort(r.begin(), r.end());
        return r;
    };
    report.aut_orders_match = orders(report.iso_classes) == orders(report.interval_classes);
    if (report.class_counts_match && report.aut_orders_match)
        report.groups_matched = match_groups(mine, theirs, limits.iso_limit, report.order_only_pairs);
    report.policy = report.order_only_pairs == 0 ? "isomorphism"
                                                  : "isomorphism; order only for " + std::to_string(report.order_only_pairs)
                                                        + " classes above iso_limit";
    return report;
}

auto DiscretenessReport::consistent() const -> bool
{
    bool all = std::all_of(levels.begin(), levels.end(), [](const LevelShape & s) { return s.all_singleton_trivial; });
    return only_identity_isos == all;
}

auto is_discrete_classifying(const FiniteCategory & cat, int truncation, const Limits & limits) -> DiscretenessReport
{
    if (truncation < 1)
        throw InvalidArgument("truncation must be at least 1");
    DiscretenessReport report;
    report.only_identity_isos = true;
    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        if (cat.is_iso(f) && ! is_identity(cat, f))
            report.only_identity_isos = false;
    for (int n = 0; n <= truncation; ++n) {
        auto level = orbit_partition(cat, n, limits);
        LevelShape shape;
        shape.level = n;
        shape.components = level.orbits.size();
        shape.all_singleton_trivial = std::all_of(level.orbits.begin(), level.orbits.end(),
            [](const Orbit & o) { return o.orbit_size == 1 && o.stabilizer.order == 1; });
        report.levels.push_back(shape);
    }
    return report;
}

auto TruncatedSimplicialSet::identity_checks() const -> size_t
{
    size_t count = 0;
    auto L = truncation();
    for (int n = 2; n <= L; ++n)
        count += level_size(n) * static_cast<size_t>(n * (n + 1) / 2);
    for (int n = 0; n < L; ++n)
        count += level_size(n) * static_cast<size_t>((n + 1) * (n + 2));
    for (int n = 0; n + 2 <= L; ++n)
        count += level_size(n) * static_cast<size_t>((n + 1) * (n + 2) / 2);
    return count;
}

auto TruncatedSimplicialSet::identity_failures() const -> vector<string>
{
    vector<string> failures;
    auto L = truncation();
    auto fail = [&](const string & what, int n, size_t x) {
        failures.push_back(what + " fails at level " + std::to_string(n) + ", simplex " + std::to_string(x));
    };

    // d_i d_j = d_{j-1} d_i, i < j
    for (int n = 2; n <= L; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (size_t x = 0; x < level_size(n); ++x)
                    if (faces[n - 1][i][faces[n][j][x]] != faces[n - 1][j - 1][faces[n][i][x]])
                        fail("d" + std::to_string(i) + " d" + std::to_string(j), n, x);

    // d_i s_j
    for (int n = 0; n < L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (size_t x = 0; x < level_size(n); ++x) {
                    auto lhs = faces[n + 1][i][degeneracies[n][j][x]];
                    int rhs;
                    if (i < j)
                        rhs = degeneracies[n - 1][j - 1][faces[n][i][x]];
                    else if (i == j || i == j + 1)
                        rhs = static_cast<int>(x);
                    else
                        rhs = degeneracies[n - 1][j][faces[n][i - 1][x]];
                    if (lhs != rhs)
                        fail("d" + std::to_string(i) + " s" + std::to_string(j), n, x);
                }

    // s_i s_j = s_{j+1} s_i, i <= j
    for (int n = 0; n + 2 <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (size_t x = 0; x < level_size(n); ++x)
                    if (degeneracies[n + 1][i][degeneracies[n][j][x]] != degeneracies[n + 1][j + 1][degeneracies[n][i][x]])
                        fail("s" + std::to_string(i) + " s" + std::to_string(j), n, x);
    return failures;
}

auto nerve_truncation(const FiniteCategory & groupoid, int truncation, int max_truncation, size_t chain_limit)
    -> TruncatedSimplicialSet
{
    if (! groupoid.is_groupoid())
        throw InvalidArgument("nerve_truncation expects a groupoid");
    if (truncation < 0)
        throw InvalidArgument("truncation must be nonnegative");
    if (truncation > max_truncation)
        throw LimitError("max_truncation", static_cast<size_t>(max_truncation), static_cast<size_t>(truncation));

    TruncatedSimplicialSet s;
    vector<ChainIndex> indices;
    for (int n = 0; n <= truncation; ++n) {
        s.simplices.push_back(enumerate_chains(groupoid, n, chain_limit));
        indices.emplace_back(s.simplices.back());
    }
    s.faces.resize(truncation + 1);
    s.degeneracies.resize(truncation + 1);
    for (int n = 1; n <= truncation; ++n)
        for (int i = 0; i <= n; ++i) {
            vector<int> map;
            for (const auto & c : s.simplices[n])
                map.push_back(indices[n - 1].at(face(groupoid, c, i)));
            s.faces[n].push_back(std::move(map));
        }
    for (int n = 0; n < truncation; ++n)
        for (int j = 0; j <= n; ++j) {
            vector<int> map;
            for (const auto & c : s.simplices[n])
                map.push_back(indices[n + 1].at(degeneracy(groupoid, c, j)));
            s.degeneracies[n].push_back(std::move(map));
        }
    return s;
}

auto FaceDegeneracyReport::ok() const -> bool
{
    for (const auto & f : faces)
        if (! f.well_defined)
            return false;
    for (const auto & d : degeneracies) {
        if (! d.well_defined)
            return false;
        if (d.image_stabilizer_order != level0.components[d.component].orbit.stabilizer.order)
            return false;
    }
    return true;
}

auto face_degeneracy_report(const FiniteCategory & cat, const Limits & limits) -> FaceDegeneracyReport
{
    auto zero = orbit_partition(cat, 0, limits);
    auto one = orbit_partition(cat, 1, limits);

    FaceDegeneracyReport report;
    for (size_t c = 0; c < one.orbits.size(); ++c) {
        FaceRow row;
        row.component = static_cast<int>(c);
        row.well_defined = true;
        for (size_t k = 0; k < one.chains.size(); ++k) {
            if (one.orbit_of[k] != static_cast<int>(c))
                continue;
            auto src = zero.orbit_of_chain(object_chain(one.chains[k].objects[0]));
            auto dst = zero.orbit_of_chain(object_chain(one.chains[k].objects[1]));
            if (row.source_component == -1) {
                row.source_component = src;
                row.target_component = dst;
            }
            else if (row.source_component != src || row.target_component != dst)
                row.well_defined = false;
        }
        report.faces.push_back(row);
    }
    for (size_t c = 0; c < zero.orbits.size(); ++c) {
        DegeneracyRow row;
        row.component = static_cast<int>(c);
        row.well_defined = true;
        for (size_t k = 0; k < zero.chains.size(); ++k) {
            if (zero.orbit_of[k] != static_cast<int>(c))
                continue;
            auto image = one.orbit_of_chain(degeneracy(cat, zero.chains[k], 0));
            if (row.image_component == -1)
                row.image_component = image;
            else if (row.image_component != image)
                row.well_defined = false;
        }
        row.image_stabilizer_order = one.orbits[row.image_component].stabilizer.order;
        report.degeneracies.push_back(row);
    }
    report.level0 = decomposition_of(cat, std::move(zero), limits);
    report.level1 = decomposition_of(cat, std::move(one), limits);
    return report;
}

}
