#pragma once

#include <cdiag/bigint.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/finset.hpp>
#include <cdiag/groups.hpp>
#include <cdiag/limits.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cdiag {

/// rows x cols matrix over F_q, q prime; represents a linear map F^cols -> F^rows.
class MatrixFq
{
public:
    MatrixFq(int rows, int cols, int q, std::vector<int> entries);
    static auto zero(int rows, int cols, int q) -> MatrixFq;
    static auto identity(int n, int q) -> MatrixFq;
    /// I_r block top left, zeros elsewhere.
    static auto rank_representative(int rows, int cols, int rank, int q) -> MatrixFq;
    /// Inverse of index(): base-q digits in row-major order.
    static auto from_index(int rows, int cols, int q, long long index) -> MatrixFq;

    auto rows() const -> int { return _rows; }
    auto cols() const -> int { return _cols; }
    auto field() const -> int { return _q; }
    auto at(int r, int c) const -> int { return _entries[r * _cols + c]; }
    auto entries() const -> const std::vector<int> & { return _entries; }
    auto index() const -> long long;

    auto rank() const -> int;
    auto is_invertible() const -> bool { return _rows == _cols && rank() == _rows; }
    auto inverse() const -> MatrixFq;
    auto transpose() const -> MatrixFq;

    friend auto operator*(const MatrixFq & a, const MatrixFq & b) -> MatrixFq;
    friend auto operator==(const MatrixFq &, const MatrixFq &) -> bool = default;

private:
    int _rows;
    int _cols;
    int _q;
    std::vector<int> _entries;
};

auto to_string(const MatrixFq & a) -> std::string;

auto glnq_order(int n, int q) -> BigInt;

/// All of GL_n(F_q) in index order.
auto general_linear_elements(int n, int q) -> std::vector<MatrixFq>;

/// Q A P^{-1} for P in GL_n, Q in GL_m and A an m x n matrix.
auto matrix_action(const MatrixFq & p, const MatrixFq & q, const MatrixFq & a) -> MatrixFq;

struct RankClass
{
    int rank = 0;
    MatrixFq representative = MatrixFq::zero(0, 0, 2);
    std::size_t class_size = 0;      ///< matrices of this rank
    std::size_t orbit_size = 0;      ///< reached by breadth-first action from the representative
    BigInt stabilizer_order;
    bool direct_scan = false;
    /// Stabilizer elements as pairs (P, Q), present when direct_scan.
    std::vector<std::pair<MatrixFq, MatrixFq>> stabilizer;
    std::optional<GroupExpr> named;  ///< for n, m <= 2
};

struct VectCell
{
    int n = 0; ///< source dimension
    int m = 0; ///< target dimension
    int q = 2;
    std::vector<RankClass> classes;
    bool rank_is_complete_invariant = false;
};

inline constexpr std::size_t default_vect_enumeration_bound = std::size_t{1} << 20;

auto orbits_by_rank(int n, int m, int q, const Limits & limits = {},
    std::size_t enumeration_bound = default_vect_enumeration_bound) -> VectCell;

struct NamedStabilizer
{
    std::string label;
    int n = 0;
    int m = 0;
    int rank = 0;
    GroupExpr group;
    BigInt order;
};

/// The stabilizers for source/target dimensions 1 and 2, with the named groups
/// in closed form: U x U, U, U x GL2, U x U x A, GL2 x GL2, U^3 x A^2, GL2.
auto named_stabilizers_dim_le2(int q) -> std::vector<NamedStabilizer>;

/// Explicit membership parameterization of the rank-1 stabilizers
/// ([1;0] in GL1 x GL2, and diag(1,0) in GL2 x GL2), as pairs (P, Q).
auto parameterized_stabilizer(int n, int m, int q) -> std::vector<std::pair<MatrixFq, MatrixFq>>;

/// Named stabilizer group for a (source, target, rank) cell with n, m <= 2.
auto named_vect_group(int n, int m, int rank, int q) -> std::optional<GroupExpr>;

struct Level0VectComponent
{
    int n = 0;
    GroupExpr group;
    BigInt order;
};

auto vect_level0(int max_dim, int q) -> std::vector<Level0VectComponent>;

/// Skeleton on F^0, ..., F^max_dim with every matrix as a morphism.
auto vect_skeleton(int max_dim, int q) -> FiniteCategory;

auto matrix_of(const FiniteCategory & skeleton, MorphismId f, int q) -> MatrixFq;

auto oracle_diff_vect(int max_dim, int q, const Limits & limits = {}) -> DiffReport;

}
