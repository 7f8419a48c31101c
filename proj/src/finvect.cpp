#include <cdiag/chains.hpp>
#include <cdiag/finvect.hpp>

#include <algorithm>
#include <map>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace cdiag {

namespace {

auto require_field(int q) -> void
{
    if (! is_prime(q))
        throw InvalidArgument("field size " + std::to_string(q) + " is not prime");
}

auto power(long long base, long long exponent) -> long long
{
    long long r = 1;
    for (long long i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

auto inverse_mod(int a, int q) -> int
{
    for (int b = 1; b < q; ++b)
        if (a * b % q == 1)
            return b;
    throw InvalidArgument("zero has no inverse");
}

/// Row reduction; returns the rank and leaves `rows` in reduced echelon form.
auto reduce(vector<vector<int>> & rows, int cols, int q) -> int
{
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1)
            continue;
        std::swap(rows[rank], rows[pivot]);
        auto inv = inverse_mod(rows[rank][c], q);
        for (auto & v : rows[rank])
            v = v * inv % q;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            auto factor = rows[r][c];
            for (size_t k = 0; k < rows[r].size(); ++k)
                rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

/// Elementary transvections and one primitive diagonal scaling; these generate GL_n(F_q).
auto gl_generators(int n, int q) -> vector<MatrixFq>
{
    vector<MatrixFq> gens;
    if (n == 0)
        return gens;
    int primitive = 1;
    for (int g = 1; g < q; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % q;
            ++order;
        } while (x != 1);
        if (order == q - 1) {
            primitive = g;
            break;
        }
    }
    if (primitive != 1) {
        auto d = MatrixFq::identity(n, q).entries();
        d[0] = primitive;
        gens.emplace_back(n, n, q, d);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            auto e = MatrixFq::identity(n, q).entries();
            e[i * n + j] = 1;
            gens.emplace_back(n, n, q, e);
        }
    return gens;
}

auto stabilizer_pairs(const MatrixFq & a, const vector<MatrixFq> & gl_n, const vector<MatrixFq> & gl_m)
    -> vector<std::pair<MatrixFq, MatrixFq>>
{
    vector<std::pair<MatrixFq, MatrixFq>> result;
    for (const auto & p : gl_n) {
        auto ap = a * p;
        for (const auto & q : gl_m)
            if (q * a == ap)
                result.emplace_back(p, q);
    }
    return result;
}

auto pair_table(const vector<std::pair<MatrixFq, MatrixFq>> & pairs) -> CayleyTable
{
    const auto & [p0, q0] = pairs.front();
    int n = p0.rows(), m = q0.rows(), q = p0.field();
    vector<Word> elements;
    for (const auto & [p, g] : pairs)
        elements.push_back({static_cast<int>(p.index()), static_cast<int>(g.index())});
    return table_of(elements, [=](const Word & x, const Word & y) {
        auto p = MatrixFq::from_index(n, n, q, x[0]) * MatrixFq::from_index(n, n, q, y[0]);
        auto g = MatrixFq::from_index(m, m, q, x[1]) * MatrixFq::from_index(m, m, q, y[1]);
        return Word{static_cast<int>(p.index()), static_cast<int>(g.index())};
    });
}

auto product_of(vector<GroupExpr> factors) -> GroupExpr
{
    if (factors.empty())
        return GroupExpr::trivial();
    if (factors.size() == 1)
        return factors[0];
    return GroupExpr::product(std::move(factors));
}

auto matrix_name(const MatrixFq & a) -> string
{
    string s = "m" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + "_";
    for (size_t i = 0; i < a.entries().size(); ++i)
        s += (i ? "_" : "") + std::to_string(a.entries()[i]);
    return s;
}

}

MatrixFq::MatrixFq(int rows, int cols, int q, vector<int> entries) :
    _rows(rows),
    _cols(cols),
    _q(q),
    _entries(std::move(entries))
{
    if (rows < 0 || cols < 0)
        throw InvalidArgument("matrix dimensions must be nonnegative");
    require_field(q);
    if (_entries.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw InvalidArgument("matrix entry count does not match its dimensions");
    for (auto & e : _entries)
        e = (e % q + q) % q;
}

auto MatrixFq::zero(int rows, int cols, int q) -> MatrixFq
{
    return MatrixFq(rows, cols, q, vector<int>(static_cast<size_t>(rows) * cols, 0));
}

auto MatrixFq::identity(int n, int q) -> MatrixFq
{
    return rank_representative(n, n, n, q);
}

auto MatrixFq::rank_representative(int rows, int cols, int rank, int q) -> MatrixFq
{
    if (rank < 0 || rank > std::min(rows, cols))
        throw InvalidArgument("rank out of range for the dimensions");
    auto a = zero(rows, cols, q);
    for (int i = 0; i < rank; ++i)
        a._entries[i * cols + i] = 1;
    return a;
}

auto MatrixFq::from_index(int rows, int cols, int q, long long index) -> MatrixFq
{
    vector<int> entries(static_cast<size_t>(rows) * cols);
    for (auto i = static_cast<long long>(entries.size()) - 1; i >= 0; --i) {
        entries[i] = static_cast<int>(index % q);
        index /= q;
    }
    if (index != 0)
        throw InvalidArgument("matrix index out of range");
    return MatrixFq(rows, cols, q, std::move(entries));
}

auto MatrixFq::index() const -> long long
{
    long long c = 0;
    for (auto e : _entries)
        c = c * _q + e;
    return c;
}

auto MatrixFq::rank() const -> int
{
    vector<vector<int>> rows(_rows, vector<int>(_cols));
    for (int r = 0; r < _rows; ++r)
        for (int c = 0; c < _cols; ++c)
            rows[r][c] = at(r, c);
    return reduce(rows, _cols, _q);
}

auto MatrixFq::inverse() const -> MatrixFq
{
    if (! is_invertible())
        throw InvalidArgument("matrix is not invertible");
    int n = _rows;
    vector<vector<int>> rows(n, vector<int>(2 * n, 0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            rows[r][c] = at(r, c);
        rows[r][n + r] = 1;
    }
    reduce(rows, n, _q);
    vector<int> entries;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            entries.push_back(rows[r][n + c]);
    return MatrixFq(n, n, _q, std::move(entries));
}

auto MatrixFq::transpose() const -> MatrixFq
{
    vector<int> entries;
    for (int c = 0; c < _cols; ++c)
        for (int r = 0; r < _rows; ++r)
            entries.push_back(at(r, c));
    return MatrixFq(_cols, _rows, _q, std::move(entries));
}

auto operator*(const MatrixFq & a, const MatrixFq & b) -> MatrixFq
{
    if (a._cols != b._rows || a._q != b._q)
        throw InvalidArgument("matrix product of incompatible shapes");
    auto r = MatrixFq::zero(a._rows, b._cols, a._q);
    for (int i = 0; i < a._rows; ++i)
        for (int k = 0; k < a._cols; ++k) {
            auto v = a.at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < b._cols; ++j)
                r._entries[i * b._cols + j] = (r._entries[i * b._cols + j] + v * b.at(k, j)) % a._q;
        }
    return r;
}

auto to_string(const MatrixFq & a) -> string
{
    string s = "[";
    for (int r = 0; r < a.rows(); ++r) {
        s += r ? ",[" : "[";
        for (int c = 0; c < a.cols(); ++c)
            s += (c ? "," : "") + std::to_string(a.at(r, c));
        s += "]";
    }
    return s + "]";
}

auto glnq_order(int n, int q) -> BigInt
{
    require_field(q);
    return order(GroupExpr::general_linear(n, q));
}

auto general_linear_elements(int n, int q) -> vector<MatrixFq>
{
    require_field(q);
    vector<MatrixFq> result;
    auto count = power(q, static_cast<long long>(n) * n);
    for (long long i = 0; i < count; ++i) {
        auto a = MatrixFq::from_index(n, n, q, i);
        if (a.is_invertible())
            result.push_back(std::move(a));
    }
    return result;
}

auto matrix_action(const MatrixFq & p, const MatrixFq & q, const MatrixFq & a) -> MatrixFq
{
    if (p.rows() != a.cols() || q.rows() != a.rows())
        throw InvalidArgument("acting matrices do not match the shape of A");
    if (! p.is_invertible() || ! q.is_invertible())
        throw InvalidArgument("acting matrices must be invertible");
    return q * a * p.inverse();
}

auto orbits_by_rank(int n, int m, int q, const Limits & limits, size_t enumeration_bound) -> VectCell
{
    require_field(q);
    if (n < 0 || m < 0)
        throw InvalidArgument("dimensions must be nonnegative");
    auto count = power(q, static_cast<long long>(n) * m);
    if (static_cast<size_t>(count) > enumeration_bound)
        throw LimitError("enumeration_bound", enumeration_bound, static_cast<size_t>(count));

    VectCell cell;
    cell.n = n;
    cell.m = m;
    cell.q = q;
    auto r_max = std::min(n, m);
    vector<size_t> class_size(r_max + 1, 0);
    for (long long i = 0; i < count; ++i)
        ++class_size[MatrixFq::from_index(m, n, q, i).rank()];

    auto gens_n = gl_generators(n, q);
    auto gens_m = gl_generators(m, q);
    auto ambient = glnq_order(n, q) * glnq_order(m, q);
    bool scan = ambient <= limits.scan_limit;
    vector<MatrixFq> gl_n, gl_m;
    if (scan) {
        gl_n = general_linear_elements(n, q);
        gl_m = general_linear_elements(m, q);
    }

    cell.rank_is_complete_invariant = true;
    for (int r = 0; r <= r_max; ++r) {
        RankClass rc;
        rc.rank = r;
        rc.representative = MatrixFq::rank_representative(m, n, r, q);
        rc.class_size = class_size[r];

        // breadth-first over the action Q A P^{-1}, generator moves on either side
        vector<bool> seen(count, false);
        vector<MatrixFq> queue{rc.representative};
        seen[rc.representative.index()] = true;
        for (size_t at = 0; at < queue.size(); ++at) {
            auto a = queue[at];
            auto visit = [&](MatrixFq b) {
                if (! seen[b.index()]) {
                    seen[b.index()] = true;
                    queue.push_back(std::move(b));
                }
            };
            for (const auto & p : gens_n)
                visit(a * p.inverse());
            for (const auto & g : gens_m)
                visit(g * a);
        }
        rc.orbit_size = queue.size();
        if (rc.orbit_size != rc.class_size)
            cell.rank_is_complete_invariant = false;
        rc.stabilizer_order = ambient / rc.orbit_size;
        if (scan) {
            rc.stabilizer = stabilizer_pairs(rc.representative, gl_n, gl_m);
            rc.direct_scan = true;
            if (BigInt(rc.stabilizer.size()) != rc.stabilizer_order)
                throw EngineError("orbit-stabilizer identity fails for rank " + std::to_string(r) + " in cell ("
                    + std::to_string(n) + "," + std::to_string(m) + ")");
        }
        if (n <= 2 && m <= 2)
            rc.named = named_vect_group(n, m, r, q);
        cell.classes.push_back(std::move(rc));
    }
    return cell;
}

auto named_vect_group(int n, int m, int rank, int q) -> std::optional<GroupExpr>
{
    require_field(q);
    if (n > 2 || m > 2 || n < 0 || m < 0 || rank < 0 || rank > std::min(n, m))
        return std::nullopt;
    auto u = GroupExpr::field_units(q);
    auto add = GroupExpr::field_additive(q);
    if (rank == 0) {
        vector<GroupExpr> factors;
        if (n > 0)
            factors.push_back(GroupExpr::general_linear(n, q));
        if (m > 0)
            factors.push_back(GroupExpr::general_linear(m, q));
        return product_of(std::move(factors));
    }
    if (n == 1 && m == 1)
        return u;
    if (n != m)
        return GroupExpr::product({u, u, add});
    if (rank == 1)
        return GroupExpr::product({u, u, u, add, add});
    return GroupExpr::general_linear(2, q);
}

auto named_stabilizers_dim_le2(int q) -> vector<NamedStabilizer>
{
    require_field(q);
    vector<NamedStabilizer> result;
    auto label = [](int n, int m, int r) -> string {
        if (r == 0)
            return "0 (" + std::to_string(m) + "x" + std::to_string(n) + ")";
        if (n == 1 && m == 1)
            return "[1]";
        if (n == 1)
            return "[1;0]";
        if (m == 1)
            return "[1 0]";
        return r == 1 ? "diag(1,0)" : "I2";
    };
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                auto g = *named_vect_group(n, m, r, q);
                result.push_back(NamedStabilizer{label(n, m, r), n, m, r, g, order(g)});
            }
    return result;
}

auto parameterized_stabilizer(int n, int m, int q) -> vector<std::pair<MatrixFq, MatrixFq>>
{
    require_field(q);
    vector<std::pair<MatrixFq, MatrixFq>> result;
    if (n == 1 && m == 2) {
        // ([a], [[a,x],[0,z]])
        for (int a = 1; a < q; ++a)
            for (int x = 0; x < q; ++x)
                for (int z = 1; z < q; ++z)
                    result.emplace_back(MatrixFq(1, 1, q, {a}), MatrixFq(2, 2, q, {a, x, 0, z}));
        return result;
    }
    if (n == 2 && m == 2) {
        // P = [[a,0],[y,z]] on the source, Q = [[a,b],[0,d]] on the target
        for (int a = 1; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int d = 1; d < q; ++d)
                    for (int y = 0; y < q; ++y)
                        for (int z = 1; z < q; ++z)
                            result.emplace_back(MatrixFq(2, 2, q, {a, 0, y, z}), MatrixFq(2, 2, q, {a, b, 0, d}));
        return result;
    }
    throw InvalidArgument("explicit parameterizations exist for [1;0] (n=1, m=2) and diag(1,0) (n=m=2) only");
}

auto vect_level0(int max_dim, int q) -> vector<Level0VectComponent>
{
    require_field(q);
    if (max_dim < 0)
        throw InvalidArgument("max_dim must be nonnegative");
    vector<Level0VectComponent> result;
    for (int n = 0; n <= max_dim; ++n) {
        auto g = GroupExpr::general_linear(n, q);
        result.push_back(Level0VectComponent{n, g, order(g)});
    }
    return result;
}

auto vect_skeleton(int max_dim, int q) -> FiniteCategory
{
    require_field(q);
    if (max_dim < 0)
        throw InvalidArgument("max_dim must be nonnegative");

    struct Data
    {
        int q = 2;
        vector<vector<long long>> offset;
        vector<MorphismId> dense;
        vector<MatrixFq> matrices;
    };
    auto data = std::make_shared<Data>();
    data->q = q;
    data->offset.assign(max_dim + 1, vector<long long>(max_dim + 1, 0));
    long long total = 0;
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m) {
            data->offset[n][m] = total;
            total += power(q, static_cast<long long>(n) * m);
            if (static_cast<size_t>(total) > default_vect_enumeration_bound)
                throw LimitError("enumeration_bound", default_vect_enumeration_bound, static_cast<size_t>(total));
        }
    data->dense.assign(total, no_morphism);

    vector<string> objects;
    vector<Morphism> morphisms;
    vector<MorphismId> identities(max_dim + 1, no_morphism);
    for (int n = 0; n <= max_dim; ++n)
        objects.push_back(std::to_string(n));
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m) {
            auto count = power(q, static_cast<long long>(n) * m);
            for (long long c = 0; c < count; ++c) {
                auto a = MatrixFq::from_index(m, n, q, c);
                auto id = static_cast<MorphismId>(morphisms.size());
                data->dense[data->offset[n][m] + c] = id;
                morphisms.push_back(Morphism{matrix_name(a), n, m});
                if (n == m && a == MatrixFq::identity(n, q))
                    identities[n] = id;
                data->matrices.push_back(std::move(a));
            }
        }

    vector<MorphismId> inverses(morphisms.size(), no_morphism);
    for (MorphismId f = 0; f < static_cast<MorphismId>(morphisms.size()); ++f) {
        const auto & a = data->matrices[f];
        if (a.rows() == a.cols() && a.is_invertible())
            inverses[f] = data->dense[data->offset[a.cols()][a.rows()] + a.inverse().index()];
    }

    auto compose = [data](MorphismId g, MorphismId f) -> MorphismId {
        auto h = data->matrices[g] * data->matrices[f];
        return data->dense[data->offset[h.cols()][h.rows()] + h.index()];
    };
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), compose, std::move(inverses));
}

auto matrix_of(const FiniteCategory & skeleton, MorphismId f, int q) -> MatrixFq
{
    const auto & name = skeleton.morphism(f).name;
    auto x = name.find('x');
    auto underscore = name.find('_');
    if (name.empty() || name[0] != 'm' || x == string::npos || underscore == string::npos || x > underscore)
        throw InvalidArgument("morphism " + name + " is not a vect skeleton matrix");
    auto rows = std::stoi(name.substr(1, x - 1));
    auto cols = std::stoi(name.substr(x + 1, underscore - x - 1));
    vector<int> entries;
    size_t at = underscore + 1;
    while (at < name.size()) {
        auto next = name.find('_', at);
        if (next == string::npos)
            next = name.size();
        entries.push_back(std::stoi(name.substr(at, next - at)));
        at = next + 1;
    }
    return MatrixFq(rows, cols, q, std::move(entries));
}

auto oracle_diff_vect(int max_dim, int q, const Limits & limits) -> DiffReport
{
    require_field(q);
    auto skeleton = vect_skeleton(max_dim, q);
    DiffReport report;

    // level 0: one class per dimension with automorphism group GL_n
    auto classes = iso_classes_of_objects(skeleton, limits);
    auto level0 = vect_level0(max_dim, q);
    bool level0_ok = classes.size() == level0.size();
    for (size_t i = 0; level0_ok && i < classes.size(); ++i)
        level0_ok = classes[i].stabilizer.order == level0[i].order;
    report.notes.push_back(DiffNote{"level 0", level0_ok ? "pass" : "fail",
        std::to_string(classes.size()) + " classes with automorphism groups GL_0..GL_" + std::to_string(max_dim)});
    if (! level0_ok)
        ++report.mismatches;

    auto level = orbit_partition(skeleton, 1, limits);
    std::map<std::pair<int, int>, vector<int>> by_cell; // (source, target) -> orbit indices
    for (size_t o = 0; o < level.orbits.size(); ++o) {
        const auto & rep = level.orbits[o].representative;
        by_cell[{rep.objects[0], rep.objects[1]}].push_back(static_cast<int>(o));
    }

    std::map<std::pair<int, int>, std::multiset<BigInt>> cell_orders;
    size_t named_checked = 0, named_isomorphic = 0, named_order_only = 0;
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m) {
            auto cell = orbits_by_rank(n, m, q, limits);
            auto & observed = by_cell[{n, m}];
            if (! cell.rank_is_complete_invariant) {
                ++report.mismatches;
                report.problems.push_back("cell (" + std::to_string(n) + "," + std::to_string(m) + "): a rank class is not one orbit");
            }
            std::map<int, int> orbit_of_rank;
            for (auto o : observed) {
                auto rank = matrix_of(skeleton, level.orbits[o].representative.morphisms[0], q).rank();
                if (! orbit_of_rank.emplace(rank, o).second) {
                    ++report.mismatches;
                    report.problems.push_back("cell (" + std::to_string(n) + "," + std::to_string(m) + "): two orbits of rank "
                        + std::to_string(rank));
                }
            }

            for (const auto & rc : cell.classes) {
                DiffRow row;
                row.n = n;
                row.m = m;
                row.key = "rank " + std::to_string(rc.rank);
                row.group_expr = rc.named ? to_string(*rc.named) : "stabilizer in GL(" + std::to_string(n) + ") x GL("
                        + std::to_string(m) + ")";
                row.expected_order = rc.stabilizer_order;
                auto it = orbit_of_rank.find(rc.rank);
                if (it == orbit_of_rank.end()) {
                    row.detail = "no brute-force orbit of this rank";
                    ++report.mismatches;
                    report.rows.push_back(std::move(row));
                    continue;
                }
                const auto & orbit = level.orbits[it->second];
                row.observed_order = orbit.stabilizer.order;
                row.orbit_size = orbit.cell_size;
                row.matches = row.observed_order == row.expected_order && orbit.cell_size == rc.class_size;
                if (rc.named && order(*rc.named) != rc.stabilizer_order) {
                    row.matches = false;
                    row.detail = "named group order " + order(*rc.named).str() + " differs";
                }
                cell_orders[{n, m}].insert(row.observed_order);

                if (row.matches && rc.direct_scan && rc.stabilizer_order <= limits.iso_limit && orbit.stabilizer.order_confirmed) {
                    row.policy = "isomorphism";
                    auto engine = closure(*orbit.stabilizer.generators, limits.table_limit);
                    auto scanned = pair_table(rc.stabilizer);
                    if (are_isomorphic(engine, scanned, limits.iso_limit) != IsoOutcome::isomorphic) {
                        row.matches = false;
                        row.detail = "engine stabilizer not isomorphic to the scanned one";
                    }
                    else if (rc.named) {
                        ++named_checked;
                        auto outcome = are_isomorphic(scanned, materialize(*rc.named, limits.table_limit), limits.iso_limit);
                        if (outcome == IsoOutcome::isomorphic)
                            ++named_isomorphic;
                        else
                            row.detail = "same order as " + row.group_expr + ", not isomorphic to it";
                    }
                }
                else {
                    row.policy = "order";
                    if (rc.named)
                        ++named_order_only;
                }
                if (! row.matches)
                    ++report.mismatches;
                report.rows.push_back(std::move(row));
            }
        }

    bool symmetric = true;
    for (int n = 0; n <= max_dim; ++n)
        for (int m = 0; m <= max_dim; ++m)
            if (cell_orders[{n, m}] != cell_orders[{m, n}])
                symmetric = false;
    report.notes.push_back(DiffNote{"transpose symmetry", symmetric ? "pass" : "fail",
        "stabilizer orders of cell (n,m) equal those of (m,n)"});
    if (! symmetric)
        ++report.mismatches;

    report.notes.push_back(DiffNote{"named groups", named_isomorphic == named_checked ? "pass" : "note",
        std::to_string(named_isomorphic) + " of " + std::to_string(named_checked)
            + " named stabilizers isomorphic to the brute-force group; " + std::to_string(named_order_only)
            + " compared by order only"});

    if (max_dim >= 2) {
        auto gl1 = general_linear_elements(1, q);
        auto gl2 = general_linear_elements(2, q);
        bool all_ok = true;
        for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 2}}) {
            auto expected = parameterized_stabilizer(n, m, q);
            auto found = stabilizer_pairs(MatrixFq::rank_representative(m, n, 1, q), n == 1 ? gl1 : gl2, gl2);
            auto key = [](const std::pair<MatrixFq, MatrixFq> & p) { return std::pair{p.first.index(), p.second.index()}; };
            std::set<std::pair<long long, long long>> a, b;
            for (const auto & p : expected)
                a.insert(key(p));
            for (const auto & p : found)
                b.insert(key(p));
            all_ok = all_ok && a == b && a.size() == expected.size();
        }
        report.notes.push_back(DiffNote{"explicit stabilizers", all_ok ? "pass" : "fail",
            "parameterized stabilizers of [1;0] and diag(1,0) equal the scanned sets"});
        if (! all_ok)
            ++report.mismatches;
    }
    return report;
}

}
