#include <cdiag/chains.hpp>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

using std::size_t;
using std::string;
using std::vector;

namespace cdiag {

namespace {

struct KeyHash
{
    auto operator()(const vector<int> & w) const noexcept -> size_t
    {
        size_t h = 1469598103934665603ULL;
        for (auto v : w)
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Isomorphism classes of objects with one chosen isomorphism from each
/// class representative to every member.
struct ObjectClasses
{
    vector<int> class_of;
    vector<vector<ObjectId>> members;
    vector<MorphismId> from_rep; ///< rep -> x

    ObjectClasses(const FiniteCategory & cat) :
        class_of(cat.object_count(), -1),
        from_rep(cat.object_count(), no_morphism)
    {
        for (ObjectId x = 0; x < cat.object_count(); ++x) {
            if (class_of[x] != -1)
                continue;
            auto c = static_cast<int>(members.size());
            members.push_back({x});
            class_of[x] = c;
            from_rep[x] = cat.identity(x);
            for (size_t at = 0; at < members[c].size(); ++at) {
                auto y = members[c][at];
                for (auto f : cat.isos_from(y)) {
                    auto z = cat.target(f);
                    if (class_of[z] == -1) {
                        class_of[z] = c;
                        from_rep[z] = cat.compose_unchecked(f, from_rep[y]);
                        members[c].push_back(z);
                    }
                }
            }
        }
    }

    /// An isomorphism x -> y for x, y in one class.
    auto connector(const FiniteCategory & cat, ObjectId x, ObjectId y) const -> MorphismId
    {
        return cat.compose_unchecked(from_rep[y], cat.inverse(from_rep[x]));
    }
};

/// Applies alpha (an isomorphism out of x_i) at coordinate i only.
auto move(const FiniteCategory & cat, const Chain & chain, size_t i, MorphismId alpha) -> Chain
{
    Chain result = chain;
    result.objects[i] = cat.target(alpha);
    if (i >= 1)
        result.morphisms[i - 1] = cat.compose_unchecked(alpha, chain.morphisms[i - 1]);
    if (i < chain.morphisms.size())
        result.morphisms[i] = cat.compose_unchecked(chain.morphisms[i], cat.inverse(alpha));
    return result;
}

auto make_generator_set(const FiniteCategory & cat, const vector<ObjectId> & objects) -> GeneratorSet
{
    GeneratorSet gens;
    gens.category = cat;
    gens.objects = objects;
    return gens;
}

/// Drops elements already generated by the earlier ones. Returns false if the
/// closure ever grows past limit (the remaining candidates are then kept as-is).
auto sift(const GeneratorSet & ambient, const vector<Word> & candidates, size_t limit, vector<Word> & kept, size_t & closure_size)
    -> bool
{
    auto identity = ambient.identity_word();
    auto product = ambient.product();
    std::unordered_set<Word, KeyHash> members{identity};
    closure_size = 1;
    for (size_t c = 0; c < candidates.size(); ++c) {
        if (members.contains(candidates[c]))
            continue;
        kept.push_back(candidates[c]);
        try {
            auto elements = closure_elements(kept, identity, product, limit);
            members = std::unordered_set<Word, KeyHash>(elements.begin(), elements.end());
            closure_size = elements.size();
        }
        catch (const LimitError &) {
            for (size_t d = c + 1; d < candidates.size(); ++d)
                kept.push_back(candidates[d]);
            return false;
        }
    }
    return true;
}

}

auto operator<(const Chain & a, const Chain & b) -> bool
{
    return a.key() < b.key();
}

auto make_chain(const FiniteCategory & cat, vector<MorphismId> morphisms) -> Chain
{
    if (morphisms.empty())
        throw InvalidArgument("make_chain needs at least one morphism; use object_chain for level 0");
    Chain chain;
    for (size_t i = 0; i < morphisms.size(); ++i) {
        if (! cat.valid_morphism(morphisms[i]))
            throw InvalidArgument("unknown morphism index in chain");
        if (i > 0 && cat.target(morphisms[i - 1]) != cat.source(morphisms[i]))
            throw InvalidArgument("chain morphisms are not composable at position " + std::to_string(i));
    }
    chain.objects.push_back(cat.source(morphisms[0]));
    for (auto f : morphisms)
        chain.objects.push_back(cat.target(f));
    chain.morphisms = std::move(morphisms);
    return chain;
}

auto object_chain(ObjectId x) -> Chain
{
    return Chain{{x}, {}};
}

auto describe(const FiniteCategory & cat, const Chain & chain) -> string
{
    if (chain.morphisms.empty())
        return cat.object_name(chain.objects[0]);
    string s;
    for (size_t i = 0; i < chain.morphisms.size(); ++i)
        s += (i ? "," : "") + cat.morphism(chain.morphisms[i]).name;
    return "(" + s + ")";
}

auto is_valid_chain_iso(const FiniteCategory & cat, const ChainIso & iso) -> bool
{
    const auto & s = iso.source;
    const auto & t = iso.target;
    if (iso.alphas.size() != s.objects.size() || t.objects.size() != s.objects.size())
        return false;
    for (size_t i = 0; i < iso.alphas.size(); ++i) {
        auto a = iso.alphas[i];
        if (! cat.valid_morphism(a) || ! cat.is_iso(a) || cat.source(a) != s.objects[i] || cat.target(a) != t.objects[i])
            return false;
    }
    for (size_t i = 1; i < iso.alphas.size(); ++i)
        if (cat.compose_unchecked(iso.alphas[i], s.morphisms[i - 1]) != cat.compose_unchecked(t.morphisms[i - 1], iso.alphas[i - 1]))
            return false;
    return true;
}

auto enumerate_chains(const FiniteCategory & cat, int n, size_t chain_limit) -> vector<Chain>
{
    if (n < 0)
        throw InvalidArgument("chain level must be nonnegative");
    vector<Chain> chains;
    if (n == 0) {
        for (ObjectId x = 0; x < cat.object_count(); ++x)
            chains.push_back(object_chain(x));
        return chains;
    }

    vector<MorphismId> current;
    auto recurse = [&](auto & self) -> void {
        if (static_cast<int>(current.size()) == n) {
            chains.push_back(make_chain(cat, current));
            if (chains.size() > chain_limit)
                throw LimitError("chain_limit", chain_limit, chains.size());
            return;
        }
        auto candidates = current.empty() ? vector<MorphismId>{} : vector<MorphismId>(cat.outgoing(cat.target(current.back())).begin(), cat.outgoing(cat.target(current.back())).end());
        if (current.empty())
            for (MorphismId f = 0; f < cat.morphism_count(); ++f)
                candidates.push_back(f);
        for (auto f : candidates) {
            current.push_back(f);
            self(self);
            current.pop_back();
        }
    };
    recurse(recurse);
    return chains;
}

auto transport(const FiniteCategory & cat, std::span<const MorphismId> alphas, const Chain & chain) -> Chain
{
    if (alphas.size() != chain.objects.size())
        throw InvalidArgument("transport needs one isomorphism per object of the chain");
    for (size_t i = 0; i < alphas.size(); ++i)
        if (! cat.valid_morphism(alphas[i]) || cat.source(alphas[i]) != chain.objects[i] || ! cat.is_iso(alphas[i]))
            throw InvalidArgument("alpha_" + std::to_string(i) + " is not an isomorphism out of x_" + std::to_string(i));
    Chain result;
    for (auto a : alphas)
        result.objects.push_back(cat.target(a));
    for (size_t i = 1; i < alphas.size(); ++i)
        result.morphisms.push_back(cat.compose_unchecked(cat.compose_unchecked(alphas[i], chain.morphisms[i - 1]), cat.inverse(alphas[i - 1])));
    return result;
}

auto act(const FiniteCategory & cat, std::span<const MorphismId> alphas, const Chain & chain) -> Chain
{
    if (alphas.size() != chain.objects.size())
        throw InvalidArgument("act needs one automorphism per object of the chain");
    for (size_t i = 0; i < alphas.size(); ++i)
        if (! cat.valid_morphism(alphas[i]) || cat.source(alphas[i]) != chain.objects[i] || cat.target(alphas[i]) != chain.objects[i]
            || ! cat.is_iso(alphas[i]))
            throw InvalidArgument("alpha_" + std::to_string(i) + " is not an automorphism of x_" + std::to_string(i));
    return transport(cat, alphas, chain);
}

auto multiply_tuples(const FiniteCategory & cat, std::span<const MorphismId> beta, std::span<const MorphismId> gamma)
    -> vector<MorphismId>
{
    if (beta.size() != gamma.size())
        throw InvalidArgument("tuple lengths differ");
    vector<MorphismId> r;
    for (size_t i = 0; i < beta.size(); ++i)
        r.push_back(cat.compose(beta[i], gamma[i]));
    return r;
}

auto aut_product_order(const FiniteCategory & cat, std::span<const ObjectId> objects) -> BigInt
{
    BigInt result = 1;
    for (auto x : objects)
        result *= cat.automorphisms(x).size();
    return result;
}

auto automorphism_generators(const FiniteCategory & cat, ObjectId x) -> vector<MorphismId>
{
    auto auts = cat.automorphisms(x);
    vector<bool> member(cat.morphism_count(), false);
    vector<MorphismId> gens;
    vector<MorphismId> group{cat.identity(x)};
    member[cat.identity(x)] = true;
    for (auto a : auts) {
        if (member[a])
            continue;
        gens.push_back(a);
        for (size_t at = 0; at < group.size(); ++at)
            for (auto g : gens) {
                auto p = cat.compose_unchecked(group[at], g);
                if (! member[p]) {
                    member[p] = true;
                    group.push_back(p);
                }
            }
    }
    return gens;
}

auto stabilizer(const FiniteCategory & cat, const Chain & chain, const Limits & limits) -> Stabilizer
{
    const auto & xs = chain.objects;
    auto ambient = aut_product_order(cat, xs);
    auto gens = make_generator_set(cat, xs);
    Stabilizer result;

    if (ambient <= limits.scan_limit) {
        // alpha fixes the chain iff alpha_i f_i = f_i alpha_{i-1} for every i
        vector<Word> elements;
        Word alpha(xs.size());
        auto recurse = [&](auto & self, size_t i) -> void {
            if (i == xs.size()) {
                elements.push_back(alpha);
                return;
            }
            for (auto a : cat.automorphisms(xs[i])) {
                if (i >= 1 && cat.compose_unchecked(a, chain.morphisms[i - 1]) != cat.compose_unchecked(chain.morphisms[i - 1], alpha[i - 1]))
                    continue;
                alpha[i] = a;
                self(self, i + 1);
            }
        };
        recurse(recurse, 0);

        vector<Word> kept;
        size_t closure_size = 0;
        sift(gens, elements, limits.table_limit, kept, closure_size);
        gens.generators = std::move(kept);
        gens.order = elements.size();
        gens.order_provenance = "direct scan";
        result.direct_scan = true;
        result.order = gens.order;
        result.generators = std::make_shared<const GeneratorSet>(std::move(gens));
        return result;
    }

    // Transversal fallback: BFS over the Aut(x)-orbit recording t_c with t_c . chain = c;
    // the Schreier generators t_{s c}^{-1} s t_c generate the stabilizer.
    vector<vector<MorphismId>> coordinate_gens;
    for (auto x : xs)
        coordinate_gens.push_back(automorphism_generators(cat, x));

    auto product = gens.product();
    auto inverse = [&](const Word & w) {
        Word r;
        for (auto a : w)
            r.push_back(cat.inverse(a));
        return r;
    };

    std::unordered_map<vector<int>, size_t, KeyHash> index{{chain.key(), 0}};
    vector<Chain> orbit{chain};
    vector<Word> transversal{gens.identity_word()};
    std::unordered_set<Word, KeyHash> schreier;
    for (size_t at = 0; at < orbit.size(); ++at)
        for (size_t i = 0; i < xs.size(); ++i)
            for (auto s : coordinate_gens[i]) {
                auto image = move(cat, orbit[at], i, s);
                Word s_word = gens.identity_word();
                s_word[i] = s;
                auto st = product(s_word, transversal[at]);
                auto [it, inserted] = index.emplace(image.key(), orbit.size());
                if (inserted) {
                    orbit.push_back(std::move(image));
                    transversal.push_back(st);
                    if (orbit.size() > limits.chain_limit)
                        throw LimitError("chain_limit", limits.chain_limit, orbit.size());
                }
                else {
                    auto h = product(inverse(transversal[it->second]), st);
                    if (h != gens.identity_word())
                        schreier.insert(std::move(h));
                }
            }

    vector<Word> candidates(schreier.begin(), schreier.end());
    std::sort(candidates.begin(), candidates.end());
    result.order = ambient / orbit.size();
    vector<Word> kept;
    size_t closure_size = 0;
    bool closed = result.order <= limits.table_limit && sift(gens, candidates, limits.table_limit, kept, closure_size);
    if (closed) {
        if (BigInt(closure_size) != result.order)
            throw EngineError("orbit-stabilizer identity fails for " + describe(cat, chain) + ": closure " + std::to_string(closure_size)
                + " vs " + result.order.str());
        gens.order_provenance = "orbit-stabilizer, confirmed by closure";
    }
    else {
        if (kept.empty())
            kept = std::move(candidates);
        gens.order_provenance = "orbit-stabilizer";
        result.order_confirmed = false;
    }
    gens.generators = std::move(kept);
    gens.order = result.order;
    result.generators = std::make_shared<const GeneratorSet>(std::move(gens));
    return result;
}

auto LevelOrbits::orbit_of_chain(const Chain & chain) const -> int
{
    auto it = std::lower_bound(chains.begin(), chains.end(), chain);
    if (it == chains.end() || it->key() != chain.key())
        return -1;
    return orbit_of[it - chains.begin()];
}

auto orbit_partition(const FiniteCategory & cat, int n, const Limits & limits, bool reversed) -> LevelOrbits
{
    LevelOrbits result;
    result.level = n;
    result.chains = enumerate_chains(cat, n, limits.chain_limit);
    const auto & chains = result.chains;

    std::unordered_map<vector<int>, int, KeyHash> index;
    for (size_t c = 0; c < chains.size(); ++c)
        index.emplace(chains[c].key(), static_cast<int>(c));

    ObjectClasses classes(cat);
    vector<vector<MorphismId>> aut_gens;
    vector<vector<MorphismId>> object_moves(cat.object_count());
    for (ObjectId x = 0; x < cat.object_count(); ++x) {
        object_moves[x] = automorphism_generators(cat, x);
        for (auto y : classes.members[classes.class_of[x]])
            if (y != x)
                object_moves[x].push_back(classes.connector(cat, x, y));
    }

    vector<int> orbit_of(chains.size(), -1);
    vector<vector<int>> members_of;
    for (size_t step = 0; step < chains.size(); ++step) {
        auto start = reversed ? chains.size() - 1 - step : step;
        if (orbit_of[start] != -1)
            continue;
        auto id = static_cast<int>(members_of.size());
        vector<int> members{static_cast<int>(start)};
        orbit_of[start] = id;
        for (size_t at = 0; at < members.size(); ++at) {
            const auto & c = chains[members[at]];
            for (size_t i = 0; i < c.objects.size(); ++i)
                for (auto a : object_moves[c.objects[i]]) {
                    auto image = move(cat, c, i, a);
                    auto it = index.find(image.key());
                    if (it == index.end())
                        throw EngineError("transported chain missing from enumeration: " + describe(cat, image));
                    if (orbit_of[it->second] == -1) {
                        orbit_of[it->second] = id;
                        members.push_back(it->second);
                    }
                }
        }
        members_of.push_back(std::move(members));
    }

    vector<Orbit> unsorted;
    for (const auto & members : members_of) {
        auto rep = *std::min_element(members.begin(), members.end());
        Orbit orbit;
        orbit.representative = chains[rep];
        orbit.orbit_size = members.size();
        orbit.cell_size = static_cast<size_t>(std::count_if(members.begin(), members.end(),
            [&](int m) { return chains[m].objects == orbit.representative.objects; }));
        orbit.stabilizer = stabilizer(cat, orbit.representative, limits);
        orbit.ambient_order = aut_product_order(cat, orbit.representative.objects);
        if (BigInt(orbit.cell_size) * orbit.stabilizer.order != orbit.ambient_order)
            throw EngineError("orbit-stabilizer identity fails for " + describe(cat, orbit.representative));
        unsorted.push_back(std::move(orbit));
    }

    vector<int> order(unsorted.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return unsorted[a].representative < unsorted[b].representative; });
    vector<int> new_id(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        new_id[order[i]] = static_cast<int>(i);
        result.orbits.push_back(std::move(unsorted[order[i]]));
    }
    for (auto & o : orbit_of)
        o = new_id[o];
    result.orbit_of = std::move(orbit_of);
    return result;
}

auto orbits(const FiniteCategory & cat, int n, const Limits & limits) -> vector<Orbit>
{
    return orbit_partition(cat, n, limits).orbits;
}

auto iso_classes_of_objects(const FiniteCategory & cat, const Limits & limits) -> vector<Orbit>
{
    return orbits(cat, 0, limits);
}

}
