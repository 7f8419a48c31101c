#pragma once

#include <cdiag/bigint.hpp>
#include <cdiag/errors.hpp>
#include <cdiag/fincat.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cdiag {

/// Dense multiplication table of a finite group over element indices 0..n-1.
class CayleyTable
{
public:
    /// Checks closure, identity, inverses and associativity (exhaustively for
    /// small n, Light's test over a generating set otherwise).
    static auto from_table(std::size_t n, std::vector<std::uint32_t> table) -> CayleyTable;

    auto size() const -> std::size_t { return _n; }
    auto multiply(std::uint32_t a, std::uint32_t b) const -> std::uint32_t { return _table[a * _n + b]; }
    auto identity() const -> std::uint32_t { return _identity; }
    auto inverse(std::uint32_t a) const -> std::uint32_t { return _inverses[a]; }
    auto element_order(std::uint32_t a) const -> std::size_t;
    auto is_abelian() const -> bool;
    auto raw() const -> const std::vector<std::uint32_t> & { return _table; }

private:
    CayleyTable() = default;

    std::size_t _n = 0;
    std::vector<std::uint32_t> _table;
    std::uint32_t _identity = 0;
    std::vector<std::uint32_t> _inverses;
};

/// An element of a concrete group encoded as an integer tuple (morphism ids, a
/// permutation, matrix entries, ...).
using Word = std::vector<int>;
using WordProduct = std::function<Word(const Word &, const Word &)>;

/// Breadth-first closure under right multiplication by the generators.
/// Element 0 of the result is the identity. Throws LimitError past `limit`.
auto closure_elements(const std::vector<Word> & generators, const Word & identity, const WordProduct & product,
    std::size_t limit) -> std::vector<Word>;

/// Cayley table over the elements found by closure_elements, in discovery order.
auto closure(const std::vector<Word> & generators, const Word & identity, const WordProduct & product,
    std::size_t limit) -> CayleyTable;

/// Cayley table of an explicit element list that is already closed under `product`.
auto table_of(const std::vector<Word> & elements, const WordProduct & product) -> CayleyTable;

/**
 * Generators inside Aut(x_0) x ... x Aut(x_n) of a category; each element is
 * an (n+1)-tuple of morphism ids multiplied coordinatewise.
 */
struct GeneratorSet
{
    FiniteCategory category;
    std::vector<ObjectId> objects;
    std::vector<Word> generators;
    BigInt order = 1; ///< exact order of the generated subgroup
    std::string order_provenance;

    auto identity_word() const -> Word;
    auto product() const -> WordProduct;
};

auto closure(const GeneratorSet & gens, std::size_t limit) -> CayleyTable;

class GroupExpr
{
public:
    enum class Kind
    {
        trivial,
        symmetric,
        cyclic,
        general_linear,
        field_units,
        field_additive,
        product,
        wreath,
        concrete,
        perm_sub
    };

    static auto trivial() -> GroupExpr;
    static auto symmetric(int n) -> GroupExpr;
    static auto cyclic(int n) -> GroupExpr;
    static auto general_linear(int n, int q) -> GroupExpr;
    static auto field_units(int q) -> GroupExpr;
    static auto field_additive(int q) -> GroupExpr;
    static auto product(std::vector<GroupExpr> factors) -> GroupExpr;
    /// base wr S_k
    static auto wreath(GroupExpr base, int top_degree) -> GroupExpr;
    static auto concrete(std::shared_ptr<const CayleyTable> table) -> GroupExpr;
    static auto perm_sub(std::shared_ptr<const GeneratorSet> gens) -> GroupExpr;

    auto kind() const -> Kind { return _kind; }
    auto degree() const -> int { return _n; }
    auto field() const -> int { return _q; }
    auto children() const -> const std::vector<GroupExpr> & { return _children; }
    auto table() const -> const std::shared_ptr<const CayleyTable> & { return _table; }
    auto generators() const -> const std::shared_ptr<const GeneratorSet> & { return _gens; }

private:
    Kind _kind = Kind::trivial;
    int _n = 0;
    int _q = 0;
    std::vector<GroupExpr> _children;
    std::shared_ptr<const CayleyTable> _table;
    std::shared_ptr<const GeneratorSet> _gens;
};

auto is_prime(long long q) -> bool;

/// Exact order; throws InvalidArgument when a field size is not prime.
auto order(const GroupExpr & expr) -> BigInt;

/// Canonical text form: `1`, `S3`, `C4`, `GL(2,3)`, `U(5)`, `A(5)`, `S3 wr S4`,
/// `(S2 wr S2) x (S4 wr S2)`.
auto to_string(const GroupExpr & expr) -> std::string;

/// Concrete table; throws LimitError when order(expr) exceeds table_limit.
auto materialize(const GroupExpr & expr, std::size_t table_limit = 20'000) -> CayleyTable;

enum class IsoOutcome
{
    isomorphic,
    not_isomorphic,
    undecided
};

auto to_string(IsoOutcome outcome) -> std::string;

/// Isomorphism test by invariant rejection then backtracking over generator
/// images. Orders above iso_limit yield `undecided` (never `not_isomorphic`
/// unless the orders differ).
auto are_isomorphic(const CayleyTable & a, const CayleyTable & b, std::size_t iso_limit = 512) -> IsoOutcome;

/// Greedy generating set (element indices), preferring high element order.
auto generating_set(const CayleyTable & table) -> std::vector<std::uint32_t>;

/// Aut(x) as a Cayley table, elements in the order of cat.automorphisms(x).
auto automorphism_table(const FiniteCategory & cat, ObjectId x) -> CayleyTable;

/// Perfect matching between two lists of groups pairing isomorphic tables;
/// pairs above iso_limit are matched on order alone and counted in order_only.
auto match_groups(const std::vector<CayleyTable> & a, const std::vector<CayleyTable> & b, std::size_t iso_limit,
    std::size_t & order_only) -> bool;

/// Matches a table against trivial, cyclic C_k (k <= 12), S_k (k <= 6) and
/// products of those (at most four factors).
auto identify_named(const CayleyTable & table) -> std::optional<GroupExpr>;

}
