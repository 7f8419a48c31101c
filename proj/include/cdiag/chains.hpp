#pragma once

#include <cdiag/bigint.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>
#include <cdiag/limits.hpp>

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cdiag {

/// x_0 --f_1--> x_1 --> ... --f_n--> x_n. A level-0 chain is a single object.
struct Chain
{
    std::vector<ObjectId> objects;
    std::vector<MorphismId> morphisms;

    auto level() const -> int { return static_cast<int>(objects.size()) - 1; }
    /// Dense sort key: morphism ids, or the object id at level 0.
    auto key() const -> const std::vector<int> & { return morphisms.empty() ? objects : morphisms; }

    friend auto operator==(const Chain &, const Chain &) -> bool = default;
};

auto operator<(const Chain & a, const Chain & b) -> bool;

auto make_chain(const FiniteCategory & cat, std::vector<MorphismId> morphisms) -> Chain;
auto object_chain(ObjectId x) -> Chain;
auto describe(const FiniteCategory & cat, const Chain & chain) -> std::string;

/// (alpha_0, ..., alpha_n) : source -> target with commuting squares.
struct ChainIso
{
    Chain source;
    Chain target;
    std::vector<MorphismId> alphas;
};

auto is_valid_chain_iso(const FiniteCategory & cat, const ChainIso & iso) -> bool;

/// All n-chains in lexicographic order of their dense key.
auto enumerate_chains(const FiniteCategory & cat, int n, std::size_t chain_limit = Limits{}.chain_limit)
    -> std::vector<Chain>;

/// (alpha_i f_i alpha_{i-1}^{-1})_i for arbitrary isomorphisms alpha_i out of x_i.
auto transport(const FiniteCategory & cat, std::span<const MorphismId> alphas, const Chain & chain) -> Chain;

/// The action of Aut(x_0) x ... x Aut(x_n); throws InvalidArgument unless each
/// alpha_i is an automorphism of x_i.
auto act(const FiniteCategory & cat, std::span<const MorphismId> alphas, const Chain & chain) -> Chain;

/// Coordinatewise composite: (beta * gamma)_i = beta_i o gamma_i.
auto multiply_tuples(const FiniteCategory & cat, std::span<const MorphismId> beta, std::span<const MorphismId> gamma)
    -> std::vector<MorphismId>;

/// prod_i |Aut(x_i)|.
auto aut_product_order(const FiniteCategory & cat, std::span<const ObjectId> objects) -> BigInt;

/// Small generating set of Aut(x), found greedily.
auto automorphism_generators(const FiniteCategory & cat, ObjectId x) -> std::vector<MorphismId>;

struct Stabilizer
{
    std::shared_ptr<const GeneratorSet> generators;
    BigInt order;
    bool direct_scan = false;
    /// False only for the transversal fallback when closure exceeded table_limit.
    bool order_confirmed = true;

    auto handle() const -> GroupExpr { return GroupExpr::perm_sub(generators); }
};

auto stabilizer(const FiniteCategory & cat, const Chain & chain, const Limits & limits = {}) -> Stabilizer;

struct Orbit
{
    Chain representative;
    /// Members across all object tuples of the isomorphism class.
    std::size_t orbit_size = 0;
    /// Members whose object tuple equals the representative's.
    std::size_t cell_size = 0;
    Stabilizer stabilizer;
    BigInt ambient_order; ///< prod |Aut(x_i)| for the representative's objects
};

struct LevelOrbits
{
    int level = 0;
    std::vector<Chain> chains;   ///< enumeration order
    std::vector<int> orbit_of;   ///< chain index -> index into orbits
    std::vector<Orbit> orbits;   ///< sorted by representative

    auto orbit_of_chain(const Chain & chain) const -> int;
};

/// Partition of all n-chains into isomorphism classes; every orbit carries the
/// stabilizer of its (lexicographically least) representative. `reversed`
/// starts the breadth-first sweeps from the end of the enumeration; the
/// resulting partition is the same.
auto orbit_partition(const FiniteCategory & cat, int n, const Limits & limits = {}, bool reversed = false)
    -> LevelOrbits;

auto orbits(const FiniteCategory & cat, int n, const Limits & limits = {}) -> std::vector<Orbit>;

auto iso_classes_of_objects(const FiniteCategory & cat, const Limits & limits = {}) -> std::vector<Orbit>;

}
