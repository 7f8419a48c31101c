#pragma once

#include <cdiag/bigint.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>
#include <cdiag/limits.hpp>

#include <span>
#include <string>
#include <vector>

namespace cdiag {

enum class FunctionClass
{
    all,
    injective,
    surjective
};

auto to_string(FunctionClass variant) -> std::string;
auto parse_function_class(const std::string & text) -> FunctionClass;

inline constexpr int default_finset_bound = 6;

/// Skeleton on {0, ..., max_n}; object k is the set {0, ..., k-1} and a
/// morphism k -> l is its target list. Restricting to injective or surjective
/// functions yields the corresponding subcategory.
auto finset_skeleton(int max_n, FunctionClass variant = FunctionClass::all, int bound = default_finset_bound)
    -> FiniteCategory;

/// Target list of a morphism of a finset skeleton.
auto function_of(const FiniteCategory & skeleton, MorphismId f) -> std::vector<int>;

/// (k_0, ..., k_n): k_i is the number of target points with a fiber of size i.
struct FiberProfile
{
    int n = 0;
    int m = 0;
    std::vector<int> k;

    auto is_valid() const -> bool;
    friend auto operator==(const FiberProfile &, const FiberProfile &) -> bool = default;
    friend auto operator<=>(const FiberProfile &, const FiberProfile &) = default;
};

auto to_string(const FiberProfile & profile) -> std::string;

auto profile_of(std::span<const int> targets, int m) -> FiberProfile;

/// Nonnegative solutions of sum i k_i = n, sum k_i = m, lexicographic in k.
auto enumerate_profiles(int n, int m) -> std::vector<FiberProfile>;

/// Height-2 tree Gamma_{0,k_0} u ... u Gamma_{n,k_n}; stored as the profile.
struct RootedTree2
{
    FiberProfile profile;

    /// e.g. `G(2,2) u G(4,2)`; the empty tree is `G(0,0)`.
    auto display() const -> std::string;
    auto automorphism_group() const -> GroupExpr;
};

/// prod_i S_i wr S_{k_i} over the factors with k_i > 0.
auto wreath_group(const FiberProfile & profile) -> GroupExpr;

struct SymbolicComponent
{
    FiberProfile profile;
    RootedTree2 tree;
    GroupExpr group;
    BigInt order;
    BigInt orbit_size; ///< |S_n x S_m| / order
};

auto closed_form_level1(int n, int m) -> std::vector<SymbolicComponent>;

struct Level0Component
{
    int n = 0;
    GroupExpr group;
    BigInt order;
};

auto closed_form_level0(int max_n) -> std::vector<Level0Component>;

struct InjectiveComponent
{
    SymbolicComponent component;
    GroupExpr stated_group; ///< the bare S_n, without the S_(m-n) factor
    bool stated_group_agrees = false; ///< order(S_n) == order of the wreath form
};

/// Empty unless n <= m; otherwise the single class of injections, whose
/// stabilizer is S_n x S_{m-n}.
auto injective_level1(int n, int m) -> std::vector<InjectiveComponent>;

/// Profiles with k_0 = 0; empty unless n >= m (and (0,0)).
auto surjective_level1(int n, int m) -> std::vector<SymbolicComponent>;

struct DiffRow
{
    int n = 0;
    int m = 0;
    std::string key;            ///< profile or rank
    std::string group_expr;
    BigInt expected_order;
    BigInt observed_order;
    std::size_t orbit_size = 0;
    std::string policy;         ///< "isomorphism" or "order"
    bool matches = false;
    std::string detail;
};

struct DiffNote
{
    std::string name;
    std::string status; ///< pass / note
    std::string detail;
};

struct DiffReport
{
    std::vector<DiffRow> rows;
    std::size_t mismatches = 0;
    std::vector<std::string> problems; ///< missing or unexpected components
    std::vector<DiffNote> notes;
};

auto oracle_diff_finset(int max_n, FunctionClass variant, const Limits & limits = {}, int bound = default_finset_bound)
    -> DiffReport;

}
