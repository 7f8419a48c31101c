#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

using std::string;
using std::vector;

namespace cdiag {

FiniteCategory::FiniteCategory() :
    FiniteCategory({}, {}, {}, [](MorphismId, MorphismId) { return no_morphism; })
{
}

FiniteCategory::FiniteCategory(vector<string> objects, vector<Morphism> morphisms, vector<MorphismId> identities,
    ComposeFn compose, vector<MorphismId> inverses)
{
    auto data = std::make_shared<Data>();
    auto n_objects = static_cast<int>(objects.size());
    if (identities.size() != objects.size())
        throw InvalidArgument("one identity per object is required");
    for (const auto & m : morphisms)
        if (m.source < 0 || m.source >= n_objects || m.target < 0 || m.target >= n_objects)
            throw InvalidArgument("morphism " + m.name + " has an unknown endpoint");

    data->homs.resize(objects.size() * objects.size());
    data->outgoing.resize(objects.size());
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f) {
        data->homs[morphisms[f].source * n_objects + morphisms[f].target].push_back(f);
        data->outgoing[morphisms[f].source].push_back(f);
    }

    for (ObjectId x = 0; x < n_objects; ++x) {
        auto id = identities[x];
        if (id < 0 || id >= static_cast<MorphismId>(morphisms.size()) || morphisms[id].source != x || morphisms[id].target != x)
            throw InvalidArgument("identity of object " + objects[x] + " is not an endomorphism of it");
    }

    data->objects = std::move(objects);
    data->morphisms = std::move(morphisms);
    data->identities = std::move(identities);
    data->compose = std::move(compose);

    if (inverses.empty()) {
        inverses.assign(data->morphisms.size(), no_morphism);
        for (MorphismId f = 0; f < static_cast<MorphismId>(data->morphisms.size()); ++f) {
            if (inverses[f] != no_morphism)
                continue;
            auto x = data->morphisms[f].source, y = data->morphisms[f].target;
            for (auto g : data->homs[y * n_objects + x]) {
                if (data->compose(g, f) == data->identities[x] && data->compose(f, g) == data->identities[y]) {
                    inverses[f] = g;
                    inverses[g] = f;
                    break;
                }
            }
        }
    }
    else if (inverses.size() != data->morphisms.size())
        throw InvalidArgument("inverse table has the wrong size");
    data->inverses = std::move(inverses);

    data->automorphisms.resize(n_objects);
    data->isos_from.resize(n_objects);
    for (ObjectId x = 0; x < n_objects; ++x) {
        data->automorphisms[x].push_back(data->identities[x]);
        for (auto f : data->homs[x * n_objects + x])
            if (f != data->identities[x] && data->inverses[f] != no_morphism)
                data->automorphisms[x].push_back(f);
        for (auto f : data->outgoing[x])
            if (data->inverses[f] != no_morphism)
                data->isos_from[x].push_back(f);
    }

    _data = std::move(data);
}

auto FiniteCategory::object_count() const -> int
{
    return static_cast<int>(_data->objects.size());
}

auto FiniteCategory::morphism_count() const -> int
{
    return static_cast<int>(_data->morphisms.size());
}

auto FiniteCategory::object_name(ObjectId x) const -> const string &
{
    if (! valid_object(x))
        throw InvalidArgument("unknown object index " + std::to_string(x));
    return _data->objects[x];
}

auto FiniteCategory::morphism(MorphismId f) const -> const Morphism &
{
    if (! valid_morphism(f))
        throw InvalidArgument("unknown morphism index " + std::to_string(f));
    return _data->morphisms[f];
}

auto FiniteCategory::identity(ObjectId x) const -> MorphismId
{
    if (! valid_object(x))
        throw InvalidArgument("unknown object index " + std::to_string(x));
    return _data->identities[x];
}

auto FiniteCategory::find_object(std::string_view name) const -> std::optional<ObjectId>
{
    for (ObjectId x = 0; x < object_count(); ++x)
        if (_data->objects[x] == name)
            return x;
    return std::nullopt;
}

auto FiniteCategory::find_morphism(std::string_view name) const -> std::optional<MorphismId>
{
    for (MorphismId f = 0; f < morphism_count(); ++f)
        if (_data->morphisms[f].name == name)
            return f;
    return std::nullopt;
}

auto FiniteCategory::compose(MorphismId g, MorphismId f) const -> MorphismId
{
    if (! valid_morphism(g) || ! valid_morphism(f))
        throw InvalidArgument("compose: unknown morphism index");
    if (_data->morphisms[f].target != _data->morphisms[g].source)
        throw InvalidArgument("compose: " + _data->morphisms[g].name + " o " + _data->morphisms[f].name + " is not composable");
    return _data->compose(g, f);
}

auto FiniteCategory::hom(ObjectId x, ObjectId y) const -> std::span<const MorphismId>
{
    return _data->homs[x * object_count() + y];
}

auto FiniteCategory::outgoing(ObjectId x) const -> std::span<const MorphismId>
{
    return _data->outgoing[x];
}

auto FiniteCategory::inverse(MorphismId f) const -> MorphismId
{
    if (! valid_morphism(f))
        throw InvalidArgument("unknown morphism index " + std::to_string(f));
    return _data->inverses[f];
}

auto FiniteCategory::automorphisms(ObjectId x) const -> std::span<const MorphismId>
{
    return _data->automorphisms[x];
}

auto FiniteCategory::isos_from(ObjectId x) const -> std::span<const MorphismId>
{
    return _data->isos_from[x];
}

auto FiniteCategory::is_groupoid() const -> bool
{
    return std::all_of(_data->inverses.begin(), _data->inverses.end(), [](MorphismId g) { return g != no_morphism; });
}

auto tabulate_composition(const vector<Morphism> & morphisms, const std::function<MorphismId(MorphismId, MorphismId)> & table)
    -> ComposeFn
{
    // Row of f lists g o f for every g out of target(f), indexed by g's position among them.
    int n_objects = 0;
    for (const auto & m : morphisms)
        n_objects = std::max({n_objects, m.source + 1, m.target + 1});

    vector<vector<MorphismId>> outgoing(n_objects);
    vector<int> position(morphisms.size());
    for (MorphismId g = 0; g < static_cast<MorphismId>(morphisms.size()); ++g) {
        position[g] = static_cast<int>(outgoing[morphisms[g].source].size());
        outgoing[morphisms[g].source].push_back(g);
    }

    auto rows = std::make_shared<vector<vector<MorphismId>>>(morphisms.size());
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f) {
        auto & row = (*rows)[f];
        for (auto g : outgoing[morphisms[f].target])
            row.push_back(table(g, f));
    }

    auto pos = std::make_shared<vector<int>>(std::move(position));
    return [rows, pos](MorphismId g, MorphismId f) { return (*rows)[f][(*pos)[g]]; };
}

void check_axioms(const FiniteCategory & cat)
{
    auto name = [&](MorphismId f) { return cat.morphism(f).name; };

    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        for (auto g : cat.outgoing(cat.target(f))) {
            auto h = cat.compose_unchecked(g, f);
            if (! cat.valid_morphism(h))
                throw ValidationError("missing composite for " + name(g) + " o " + name(f));
            if (cat.source(h) != cat.source(f) || cat.target(h) != cat.target(g))
                throw ValidationError("composite " + name(g) + " o " + name(f) + " = " + name(h) + " has the wrong endpoints");
        }

    for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
        if (cat.compose_unchecked(cat.identity(cat.target(f)), f) != f)
            throw ValidationError("identity law fails: " + name(cat.identity(cat.target(f))) + " o " + name(f) + " != " + name(f));
        if (cat.compose_unchecked(f, cat.identity(cat.source(f))) != f)
            throw ValidationError("identity law fails: " + name(f) + " o " + name(cat.identity(cat.source(f))) + " != " + name(f));
    }

    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        for (auto g : cat.outgoing(cat.target(f))) {
            auto gf = cat.compose_unchecked(g, f);
            for (auto h : cat.outgoing(cat.target(g))) {
                if (cat.compose_unchecked(h, gf) != cat.compose_unchecked(cat.compose_unchecked(h, g), f))
                    throw ValidationError("associativity fails for (" + name(h) + ", " + name(g) + ", " + name(f) + ")");
            }
        }
}

auto structurally_equal(const FiniteCategory & a, const FiniteCategory & b) -> bool
{
    if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count())
        return false;
    for (ObjectId x = 0; x < a.object_count(); ++x)
        if (a.object_name(x) != b.object_name(x) || a.identity(x) != b.identity(x))
            return false;
    for (MorphismId f = 0; f < a.morphism_count(); ++f) {
        const auto & ma = a.morphism(f);
        const auto & mb = b.morphism(f);
        if (ma.name != mb.name || ma.source != mb.source || ma.target != mb.target)
            return false;
    }
    for (MorphismId f = 0; f < a.morphism_count(); ++f)
        for (auto g : a.outgoing(a.target(f)))
            if (a.compose_unchecked(g, f) != b.compose_unchecked(g, f))
                return false;
    return true;
}

auto is_isomorphism(const FiniteCategory & cat, MorphismId f) -> bool
{
    if (! cat.valid_morphism(f))
        throw InvalidArgument("unknown morphism index " + std::to_string(f));
    for (auto g : cat.hom(cat.target(f), cat.source(f)))
        if (cat.compose_unchecked(g, f) == cat.identity(cat.source(f)) && cat.compose_unchecked(f, g) == cat.identity(cat.target(f)))
            return true;
    return false;
}

auto is_isomorphism(const FiniteCategory & cat, std::string_view morphism_name) -> bool
{
    auto f = cat.find_morphism(morphism_name);
    if (! f)
        throw InvalidArgument("unknown morphism " + string(morphism_name));
    return is_isomorphism(cat, *f);
}

auto maximal_subgroupoid(const FiniteCategory & cat) -> FiniteCategory
{
    vector<MorphismId> old_to_new(cat.morphism_count(), no_morphism);
    vector<MorphismId> new_to_old;
    vector<Morphism> morphisms;
    for (MorphismId f = 0; f < cat.morphism_count(); ++f)
        if (cat.is_iso(f)) {
            old_to_new[f] = static_cast<MorphismId>(new_to_old.size());
            new_to_old.push_back(f);
            morphisms.push_back(cat.morphism(f));
        }

    vector<string> objects;
    vector<MorphismId> identities;
    for (ObjectId x = 0; x < cat.object_count(); ++x) {
        objects.push_back(cat.object_name(x));
        identities.push_back(old_to_new[cat.identity(x)]);
    }

    vector<MorphismId> inverses;
    for (auto f : new_to_old)
        inverses.push_back(old_to_new[cat.inverse(f)]);

    auto compose = [cat, old_to_new, new_to_old](MorphismId g, MorphismId f) {
        return old_to_new[cat.compose_unchecked(new_to_old[g], new_to_old[f])];
    };
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto opposite(const FiniteCategory & cat) -> FiniteCategory
{
    vector<string> objects;
    vector<MorphismId> identities;
    for (ObjectId x = 0; x < cat.object_count(); ++x) {
        objects.push_back(cat.object_name(x));
        identities.push_back(cat.identity(x));
    }
    vector<Morphism> morphisms;
    vector<MorphismId> inverses;
    for (MorphismId f = 0; f < cat.morphism_count(); ++f) {
        const auto & m = cat.morphism(f);
        morphisms.push_back(Morphism{m.name, m.target, m.source});
        inverses.push_back(cat.inverse(f));
    }
    // g^op o f^op = (f o g)^op
    auto compose = [cat](MorphismId g, MorphismId f) { return cat.compose_unchecked(f, g); };
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto ordinal(int m) -> FiniteCategory
{
    if (m < 0)
        throw InvalidArgument("ordinal: m must be nonnegative");

    vector<string> objects;
    for (int j = 0; j <= m; ++j)
        objects.push_back(std::to_string(j));

    // index of j -> k (j <= k)
    vector<vector<MorphismId>> index(m + 1, vector<MorphismId>(m + 1, no_morphism));
    vector<Morphism> morphisms;
    vector<MorphismId> identities(m + 1);
    for (int j = 0; j <= m; ++j)
        for (int k = j; k <= m; ++k) {
            index[j][k] = static_cast<MorphismId>(morphisms.size());
            morphisms.push_back(Morphism{j == k ? "id_" + std::to_string(j) : std::to_string(j) + "_" + std::to_string(k), j, k});
            if (j == k)
                identities[j] = index[j][k];
        }

    auto compose = [index, morphisms](MorphismId g, MorphismId f) {
        return index[morphisms[f].source][morphisms[g].target];
    };
    vector<MorphismId> inverses(morphisms.size(), no_morphism);
    for (auto id : identities)
        inverses[id] = id;
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto walking_arrow() -> FiniteCategory
{
    vector<Morphism> morphisms{{"id_x", 0, 0}, {"id_y", 1, 1}, {"f", 0, 1}};
    auto table = [](MorphismId g, MorphismId f) { return g == 2 ? g : f == 2 ? f : g; };
    auto compose = tabulate_composition(morphisms, table);
    return FiniteCategory({"x", "y"}, std::move(morphisms), {0, 1}, compose);
}

auto iso_interval() -> FiniteCategory
{
    // 0 = id_x, 1 = id_y, 2 = f : x -> y, 3 = g : y -> x
    vector<Morphism> morphisms{{"id_x", 0, 0}, {"id_y", 1, 1}, {"f", 0, 1}, {"g", 1, 0}};
    auto compose = tabulate_composition(morphisms, [](MorphismId g, MorphismId f) -> MorphismId {
        if (g < 2)
            return f;
        if (f < 2)
            return g;
        return g == 2 ? 1 : 0; // f o g = id_y, g o f = id_x
    });
    return FiniteCategory({"x", "y"}, std::move(morphisms), {0, 1}, compose);
}

auto truncated_delta(int max_dim) -> FiniteCategory
{
    if (max_dim < 0)
        throw InvalidArgument("truncated_delta: bound must be nonnegative");

    vector<string> objects;
    for (int n = 0; n <= max_dim; ++n)
        objects.push_back("d" + std::to_string(n));

    // monotone maps [n] -> [m] as value sequences of length n+1
    vector<Morphism> morphisms;
    vector<vector<int>> values;
    std::map<std::pair<int, vector<int>>, MorphismId> lookup;
    vector<MorphismId> identities(max_dim + 1);
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m) {
            vector<int> seq(n + 1, 0);
            while (true) {
                string name = "d" + std::to_string(n) + "to" + std::to_string(m);
                for (auto v : seq)
                    name += "_" + std::to_string(v);
                auto id = static_cast<MorphismId>(morphisms.size());
                vector<int> identity_seq(n + 1);
                std::iota(identity_seq.begin(), identity_seq.end(), 0);
                if (n == m && seq == identity_seq) {
                    identities[n] = id;
                    name = "id_d" + std::to_string(n);
                }
                morphisms.push_back(Morphism{name, n, m});
                values.push_back(seq);
                lookup[{m, seq}] = id;

                // next nondecreasing sequence with values in [0, m]
                int i = n;
                while (i >= 0 && seq[i] == m)
                    --i;
                if (i < 0)
                    break;
                ++seq[i];
                for (int j = i + 1; j <= n; ++j)
                    seq[j] = seq[i];
            }
        }

    auto compose = tabulate_composition(morphisms, [&](MorphismId g, MorphismId f) {
        vector<int> seq;
        for (auto v : values[f])
            seq.push_back(values[g][v]);
        return lookup.at({morphisms[g].target, seq});
    });
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose);
}

auto one_object_group(const CayleyTable & table) -> FiniteCategory
{
    vector<Morphism> morphisms;
    vector<MorphismId> identities{static_cast<MorphismId>(table.identity())};
    for (std::uint32_t a = 0; a < table.size(); ++a)
        morphisms.push_back(Morphism{a == table.identity() ? "id_G" : "g" + std::to_string(a), 0, 0});
    vector<MorphismId> inverses;
    for (std::uint32_t a = 0; a < table.size(); ++a)
        inverses.push_back(static_cast<MorphismId>(table.inverse(a)));
    auto raw = std::make_shared<vector<std::uint32_t>>(table.raw());
    auto n = table.size();
    auto compose = [raw, n](MorphismId g, MorphismId f) { return static_cast<MorphismId>((*raw)[g * n + f]); };
    return FiniteCategory({"G"}, std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

}
