#pragma once

#include <cdiag/errors.hpp>

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdiag {

using ObjectId = int;
using MorphismId = int;

inline constexpr MorphismId no_morphism = -1;

struct Morphism
{
    std::string name;
    ObjectId source;
    ObjectId target;
};

/// compose(g, f) = g o f, only ever called with target(f) == source(g).
using ComposeFn = std::function<MorphismId(MorphismId g, MorphismId f)>;

/**
 * A finite category with dense integer labels.
 *
 * Objects and morphisms carry opaque names for reporting; every engine
 * computation runs on the indices. Composition is supplied either as an
 * explicit table (CATDEF input, small builtins) or as a structural function
 * (functions between finite sets, matrices), which keeps large skeleta cheap.
 * Values are immutable and cheap to copy.
 */
class FiniteCategory
{
public:
    FiniteCategory();

    /// Assembles a category without checking the axioms; see check_axioms().
    /// If inverses is empty they are found by a scan of the opposite hom-sets.
    FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
        std::vector<MorphismId> identities, ComposeFn compose, std::vector<MorphismId> inverses = {});

    auto object_count() const -> int;
    auto morphism_count() const -> int;

    auto object_name(ObjectId x) const -> const std::string &;
    auto morphism(MorphismId f) const -> const Morphism &;
    auto source(MorphismId f) const -> ObjectId { return morphism(f).source; }
    auto target(MorphismId f) const -> ObjectId { return morphism(f).target; }
    auto identity(ObjectId x) const -> MorphismId;

    auto find_object(std::string_view name) const -> std::optional<ObjectId>;
    auto find_morphism(std::string_view name) const -> std::optional<MorphismId>;

    /// Throws InvalidArgument when the pair is not composable.
    auto compose(MorphismId g, MorphismId f) const -> MorphismId;
    auto compose_unchecked(MorphismId g, MorphismId f) const -> MorphismId { return _data->compose(g, f); }

    auto hom(ObjectId x, ObjectId y) const -> std::span<const MorphismId>;
    auto outgoing(ObjectId x) const -> std::span<const MorphismId>;

    auto is_iso(MorphismId f) const -> bool { return inverse(f) != no_morphism; }
    /// no_morphism when f is not invertible.
    auto inverse(MorphismId f) const -> MorphismId;
    /// Automorphisms of x, identity first.
    auto automorphisms(ObjectId x) const -> std::span<const MorphismId>;
    /// Isomorphisms with source x, in index order.
    auto isos_from(ObjectId x) const -> std::span<const MorphismId>;

    auto is_groupoid() const -> bool;
    auto valid_morphism(MorphismId f) const -> bool { return f >= 0 && f < morphism_count(); }
    auto valid_object(ObjectId x) const -> bool { return x >= 0 && x < object_count(); }

private:
    struct Data
    {
        std::vector<std::string> objects;
        std::vector<Morphism> morphisms;
        std::vector<MorphismId> identities;
        ComposeFn compose;
        std::vector<MorphismId> inverses;
        std::vector<std::vector<MorphismId>> homs;
        std::vector<std::vector<MorphismId>> outgoing;
        std::vector<std::vector<MorphismId>> automorphisms;
        std::vector<std::vector<MorphismId>> isos_from;
    };

    std::shared_ptr<const Data> _data;
};

/// Builds a dense table-backed ComposeFn. `table(g, f)` is queried for every composable pair once.
auto tabulate_composition(const std::vector<Morphism> & morphisms, const std::function<MorphismId(MorphismId, MorphismId)> & table)
    -> ComposeFn;

/// Verifies identity laws and associativity over every composable pair/triple.
/// Throws ValidationError naming the offending pair or triple.
void check_axioms(const FiniteCategory & cat);

/// Structural equality: same names, sources, targets, identities and composition.
auto structurally_equal(const FiniteCategory & a, const FiniteCategory & b) -> bool;

auto is_isomorphism(const FiniteCategory & cat, MorphismId f) -> bool;
auto is_isomorphism(const FiniteCategory & cat, std::string_view morphism_name) -> bool;

auto maximal_subgroupoid(const FiniteCategory & cat) -> FiniteCategory;
auto opposite(const FiniteCategory & cat) -> FiniteCategory;

/// The poset 0 < 1 < ... < m.
auto ordinal(int m) -> FiniteCategory;
/// x --f--> y with no other non-identity morphisms.
auto walking_arrow() -> FiniteCategory;
/// The walking isomorphism I[1]: two objects with mutually inverse morphisms.
auto iso_interval() -> FiniteCategory;
/// Full subcategory of the simplex category on [0], ..., [max_dim].
auto truncated_delta(int max_dim) -> FiniteCategory;

class CayleyTable;
auto one_object_group(const CayleyTable & table) -> FiniteCategory;

struct CategoryInvariants
{
    int class_count = 0;
    std::vector<std::size_t> aut_orders; ///< sorted ascending, one entry per isomorphism class
};

struct EquivalenceReport
{
    CategoryInvariants first;
    CategoryInvariants second;
    bool class_count_matches = false;
    bool aut_orders_match = false;
    /// Every class of `first` paired with an isomorphic automorphism group of `second`
    /// (order-only above iso_limit). Meaningful only when the other two match.
    bool aut_groups_match = false;
    std::string policy;

    auto invariants_match() const -> bool { return class_count_matches && aut_orders_match && aut_groups_match; }
    /// Matching invariants are necessary for equivalence, not sufficient in general.
    static constexpr std::string_view caveat = "matching skeletal invariants are necessary for equivalence; not claimed sufficient";
};

auto skeletal_invariants(const FiniteCategory & cat) -> CategoryInvariants;
auto check_equivalence_invariants(const FiniteCategory & a, const FiniteCategory & b, std::size_t iso_limit = 512)
    -> EquivalenceReport;

}
