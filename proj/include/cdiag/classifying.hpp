#pragma once

#include <cdiag/chains.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>
#include <cdiag/limits.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cdiag {

struct Component
{
    Orbit orbit;
    std::optional<GroupExpr> named;
    /// "isomorphism" when the stabilizer was matched (or compared) as a table,
    /// "order" when only its order is known to agree.
    std::string policy;

    auto group_text() const -> std::string;
};

/// One level of N(C): components are coproduct summands B(stabilizer).
struct Decomposition
{
    int level = 0;
    std::size_t chain_count = 0;
    std::vector<Component> components;
};

auto level_decomposition(const FiniteCategory & cat, int n, const Limits & limits = {}) -> Decomposition;

struct SegalReport
{
    int level = 0;
    std::size_t chain_count = 0;
    std::size_t fiber_product_count = 0;
    bool bijection_verified = false;

    auto ok() const -> bool { return chain_count == fiber_product_count && bijection_verified; }
};

auto segal_check(const FiniteCategory & cat, int n, const Limits & limits = {}) -> SegalReport;

struct ClassSummary
{
    std::string representative;
    std::size_t class_size = 0;
    std::size_t aut_order = 0;
};

struct CompletenessReport
{
    std::vector<ClassSummary> iso_classes;      ///< iso(C)
    std::vector<ClassSummary> interval_classes; ///< iso(C^{I[1]})
    bool class_counts_match = false;
    bool aut_orders_match = false;
    bool groups_matched = false; ///< a perfect matching of classes by isomorphic automorphism groups
    std::size_t order_only_pairs = 0; ///< matched pairs compared by order only (above iso_limit)
    std::string policy;

    auto verdict() const -> bool { return class_counts_match && aut_orders_match && groups_matched; }
};

/// iso(C^{I[1]}) as an explicit groupoid: objects are inverse pairs (f, g),
/// morphisms are pairs of isomorphisms (alpha, beta) with commuting squares.
auto interval_groupoid(const FiniteCategory & cat, std::size_t morphism_limit = Limits{}.chain_limit) -> FiniteCategory;

auto completeness_check(const FiniteCategory & cat, const Limits & limits = {}) -> CompletenessReport;

struct LevelShape
{
    int level = 0;
    std::size_t components = 0;
    bool all_singleton_trivial = false;
};

struct DiscretenessReport
{
    bool only_identity_isos = false;
    std::vector<LevelShape> levels;

    /// The iff: only identities are isomorphisms exactly when every level is discrete.
    auto consistent() const -> bool;
};

auto is_discrete_classifying(const FiniteCategory & cat, int truncation, const Limits & limits = {})
    -> DiscretenessReport;

/**
 * Levels 0..L of the nerve of a groupoid with all face and degeneracy maps
 * tabulated; faces[n][i] maps level n to level n-1, degeneracies[n][j] maps
 * level n to level n+1.
 */
struct TruncatedSimplicialSet
{
    std::vector<std::vector<Chain>> simplices;
    std::vector<std::vector<std::vector<int>>> faces;
    std::vector<std::vector<std::vector<int>>> degeneracies;

    auto truncation() const -> int { return static_cast<int>(simplices.size()) - 1; }
    auto level_size(int n) const -> std::size_t { return simplices[n].size(); }

    /// Human-readable failures of the simplicial identities; empty when all hold.
    auto identity_failures() const -> std::vector<std::string>;
    auto identity_checks() const -> std::size_t;
};

auto nerve_truncation(const FiniteCategory & groupoid, int truncation, int max_truncation = 4,
    std::size_t chain_limit = Limits{}.chain_limit) -> TruncatedSimplicialSet;

struct FaceRow
{
    int component = 0;  ///< level-1 component index
    int source_component = -1; ///< d_1
    int target_component = -1; ///< d_0
    bool well_defined = false;
};

struct DegeneracyRow
{
    int component = 0; ///< level-0 component index
    int image_component = -1; ///< s_0
    BigInt image_stabilizer_order;
    bool well_defined = false;
};

struct FaceDegeneracyReport
{
    Decomposition level0;
    Decomposition level1;
    std::vector<FaceRow> faces;
    std::vector<DegeneracyRow> degeneracies;

    auto ok() const -> bool;
};

auto face_degeneracy_report(const FiniteCategory & cat, const Limits & limits = {}) -> FaceDegeneracyReport;

}
