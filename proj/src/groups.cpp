#include <cdiag/groups.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

using std::size_t;
using std::string;
using std::uint32_t;
using std::vector;

namespace cdiag {

namespace {

struct WordHash
{
    auto operator()(const Word & w) const noexcept -> size_t
    {
        size_t h = 1469598103934665603ULL;
        for (auto v : w) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using WordIndex = std::unordered_map<Word, uint32_t, WordHash>;

auto subgroup_closure(const CayleyTable & t, const vector<uint32_t> & gens) -> vector<bool>
{
    vector<bool> member(t.size(), false);
    vector<uint32_t> queue{t.identity()};
    member[t.identity()] = true;
    for (size_t at = 0; at < queue.size(); ++at)
        for (auto g : gens) {
            auto p = t.multiply(queue[at], g);
            if (! member[p]) {
                member[p] = true;
                queue.push_back(p);
            }
        }
    return member;
}

auto order_histogram(const CayleyTable & t) -> std::map<size_t, size_t>
{
    std::map<size_t, size_t> hist;
    for (uint32_t a = 0; a < t.size(); ++a)
        ++hist[t.element_order(a)];
    return hist;
}

auto center_size(const CayleyTable & t) -> size_t
{
    size_t count = 0;
    for (uint32_t a = 0; a < t.size(); ++a) {
        bool central = true;
        for (uint32_t b = 0; b < t.size() && central; ++b)
            central = t.multiply(a, b) == t.multiply(b, a);
        count += central;
    }
    return count;
}

auto square_count(const CayleyTable & t) -> size_t
{
    vector<bool> squares(t.size(), false);
    for (uint32_t a = 0; a < t.size(); ++a)
        squares[t.multiply(a, a)] = true;
    return static_cast<size_t>(std::count(squares.begin(), squares.end(), true));
}

auto mat_mul(const Word & a, const Word & b, int n, int q) -> Word
{
    Word c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            auto aik = a[i * n + k];
            if (aik == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % q;
        }
    return c;
}

auto mat_rank(Word a, int n, int q) -> int
{
    auto inv = [q](int x) {
        for (int y = 1; y < q; ++y)
            if (x * y % q == 1)
                return y;
        return 0;
    };
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (a[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int c = 0; c < n; ++c)
            std::swap(a[rank * n + c], a[pivot * n + c]);
        auto s = inv(a[rank * n + col]);
        for (int c = 0; c < n; ++c)
            a[rank * n + c] = a[rank * n + c] * s % q;
        for (int r = 0; r < n; ++r)
            if (r != rank && a[r * n + col] != 0) {
                auto factor = a[r * n + col];
                for (int c = 0; c < n; ++c)
                    a[r * n + c] = ((a[r * n + c] - factor * a[rank * n + c]) % q + q) % q;
            }
        ++rank;
    }
    return rank;
}

auto table_from_product(size_t n, const std::function<uint32_t(uint32_t, uint32_t)> & mul) -> CayleyTable
{
    vector<uint32_t> table(n * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            table[a * n + b] = mul(a, b);
    return CayleyTable::from_table(n, std::move(table));
}

auto permutations(int n) -> vector<Word>
{
    vector<Word> result;
    Word p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        result.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return result;
}

auto compose_permutations(const Word & p, const Word & q) -> Word
{
    Word r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

}

auto CayleyTable::from_table(size_t n, vector<uint32_t> table) -> CayleyTable
{
    if (n == 0)
        throw ValidationError("a group has at least one element");
    if (table.size() != n * n)
        throw ValidationError("Cayley table must have n*n entries");
    for (auto v : table)
        if (v >= n)
            throw ValidationError("Cayley table is not closed");

    CayleyTable t;
    t._n = n;
    t._table = std::move(table);

    bool found = false;
    for (uint32_t e = 0; e < n && ! found; ++e) {
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a)
            ok = t.multiply(e, a) == a && t.multiply(a, e) == a;
        if (ok) {
            t._identity = e;
            found = true;
        }
    }
    if (! found)
        throw ValidationError("Cayley table has no identity");

    t._inverses.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
        bool ok = false;
        for (uint32_t b = 0; b < n && ! ok; ++b)
            if (t.multiply(a, b) == t._identity && t.multiply(b, a) == t._identity) {
                t._inverses[a] = b;
                ok = true;
            }
        if (! ok)
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }

    // Light's test: elements a with (x a) y = x (a y) for all x, y form a
    // closed subset, so checking a generating set proves associativity.
    vector<uint32_t> witnesses;
    if (n <= 64) {
        witnesses.resize(n);
        std::iota(witnesses.begin(), witnesses.end(), 0u);
    }
    else {
        witnesses = generating_set(t);
        auto member = subgroup_closure(t, witnesses);
        if (std::find(member.begin(), member.end(), false) != member.end()) {
            witnesses.resize(n);
            std::iota(witnesses.begin(), witnesses.end(), 0u);
        }
    }
    for (auto a : witnesses)
        for (uint32_t x = 0; x < n; ++x) {
            auto xa = t.multiply(x, a);
            for (uint32_t y = 0; y < n; ++y)
                if (t.multiply(xa, y) != t.multiply(x, t.multiply(a, y)))
                    throw ValidationError("Cayley table is not associative at (" + std::to_string(x) + ", "
                        + std::to_string(a) + ", " + std::to_string(y) + ")");
        }
    return t;
}

auto CayleyTable::element_order(uint32_t a) const -> size_t
{
    size_t k = 1;
    for (auto p = a; p != _identity; p = multiply(p, a))
        ++k;
    return k;
}

auto CayleyTable::is_abelian() const -> bool
{
    for (uint32_t a = 0; a < _n; ++a)
        for (uint32_t b = a + 1; b < _n; ++b)
            if (multiply(a, b) != multiply(b, a))
                return false;
    return true;
}

auto closure_elements(const vector<Word> & generators, const Word & identity, const WordProduct & product, size_t limit)
    -> vector<Word>
{
    vector<Word> elements{identity};
    WordIndex seen{{identity, 0}};
    for (size_t at = 0; at < elements.size(); ++at)
        for (const auto & g : generators) {
            auto p = product(elements[at], g);
            if (seen.emplace(p, static_cast<uint32_t>(elements.size())).second) {
                elements.push_back(std::move(p));
                if (elements.size() > limit)
                    throw LimitError("table_limit", limit, elements.size());
            }
        }
    return elements;
}

auto table_of(const vector<Word> & elements, const WordProduct & product) -> CayleyTable
{
    WordIndex index;
    for (uint32_t i = 0; i < elements.size(); ++i)
        index.emplace(elements[i], i);
    auto n = elements.size();
    vector<uint32_t> table(n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto it = index.find(product(elements[a], elements[b]));
            if (it == index.end())
                throw ValidationError("element list is not closed under the product");
            table[a * n + b] = it->second;
        }
    return CayleyTable::from_table(n, std::move(table));
}

auto closure(const vector<Word> & generators, const Word & identity, const WordProduct & product, size_t limit)
    -> CayleyTable
{
    return table_of(closure_elements(generators, identity, product, limit), product);
}

auto GeneratorSet::identity_word() const -> Word
{
    Word id;
    for (auto x : objects)
        id.push_back(category.identity(x));
    return id;
}

auto GeneratorSet::product() const -> WordProduct
{
    return [cat = category](const Word & a, const Word & b) {
        Word r(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = cat.compose_unchecked(a[i], b[i]);
        return r;
    };
}

auto closure(const GeneratorSet & gens, size_t limit) -> CayleyTable
{
    return closure(gens.generators, gens.identity_word(), gens.product(), limit);
}

auto GroupExpr::trivial() -> GroupExpr
{
    return GroupExpr{};
}

auto GroupExpr::symmetric(int n) -> GroupExpr
{
    if (n < 0)
        throw InvalidArgument("symmetric group degree must be nonnegative");
    GroupExpr e;
    e._kind = Kind::symmetric;
    e._n = n;
    return e;
}

auto GroupExpr::cyclic(int n) -> GroupExpr
{
    if (n < 1)
        throw InvalidArgument("cyclic group order must be positive");
    GroupExpr e;
    e._kind = Kind::cyclic;
    e._n = n;
    return e;
}

auto GroupExpr::general_linear(int n, int q) -> GroupExpr
{
    if (n < 0)
        throw InvalidArgument("general linear dimension must be nonnegative");
    GroupExpr e;
    e._kind = Kind::general_linear;
    e._n = n;
    e._q = q;
    return e;
}

auto GroupExpr::field_units(int q) -> GroupExpr
{
    GroupExpr e;
    e._kind = Kind::field_units;
    e._q = q;
    return e;
}

auto GroupExpr::field_additive(int q) -> GroupExpr
{
    GroupExpr e;
    e._kind = Kind::field_additive;
    e._q = q;
    return e;
}

auto GroupExpr::product(vector<GroupExpr> factors) -> GroupExpr
{
    GroupExpr e;
    e._kind = Kind::product;
    e._children = std::move(factors);
    return e;
}

auto GroupExpr::wreath(GroupExpr base, int top_degree) -> GroupExpr
{
    if (top_degree < 0)
        throw InvalidArgument("wreath top degree must be nonnegative");
    GroupExpr e;
    e._kind = Kind::wreath;
    e._n = top_degree;
    e._children.push_back(std::move(base));
    return e;
}

auto GroupExpr::concrete(std::shared_ptr<const CayleyTable> table) -> GroupExpr
{
    GroupExpr e;
    e._kind = Kind::concrete;
    e._table = std::move(table);
    return e;
}

auto GroupExpr::perm_sub(std::shared_ptr<const GeneratorSet> gens) -> GroupExpr
{
    GroupExpr e;
    e._kind = Kind::perm_sub;
    e._gens = std::move(gens);
    return e;
}

auto is_prime(long long q) -> bool
{
    if (q < 2)
        return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

namespace {

void require_prime(int q)
{
    if (! is_prime(q))
        throw InvalidArgument("field size " + std::to_string(q) + " is not prime");
}

}

auto order(const GroupExpr & expr) -> BigInt
{
    using Kind = GroupExpr::Kind;
    switch (expr.kind()) {
    case Kind::trivial: return 1;
    case Kind::symmetric: return factorial(static_cast<unsigned>(expr.degree()));
    case Kind::cyclic: return expr.degree();
    case Kind::general_linear: {
        require_prime(expr.field());
        BigInt qn = boost::multiprecision::pow(BigInt(expr.field()), static_cast<unsigned>(expr.degree()));
        BigInt result = 1, qi = 1;
        for (int i = 0; i < expr.degree(); ++i) {
            result *= qn - qi;
            qi *= expr.field();
        }
        return result;
    }
    case Kind::field_units: require_prime(expr.field()); return expr.field() - 1;
    case Kind::field_additive: require_prime(expr.field()); return expr.field();
    case Kind::product: {
        BigInt result = 1;
        for (const auto & c : expr.children())
            result *= order(c);
        return result;
    }
    case Kind::wreath:
        return boost::multiprecision::pow(order(expr.children()[0]), static_cast<unsigned>(expr.degree()))
            * factorial(static_cast<unsigned>(expr.degree()));
    case Kind::concrete: return expr.table()->size();
    case Kind::perm_sub: return expr.generators()->order;
    }
    return 1;
}

auto to_string(const GroupExpr & expr) -> string
{
    using Kind = GroupExpr::Kind;
    auto wrapped = [](const GroupExpr & e) {
        auto s = to_string(e);
        if (e.kind() == Kind::product || e.kind() == Kind::wreath)
            return "(" + s + ")";
        return s;
    };
    switch (expr.kind()) {
    case Kind::trivial: return "1";
    case Kind::symmetric: return "S" + std::to_string(expr.degree());
    case Kind::cyclic: return "C" + std::to_string(expr.degree());
    case Kind::general_linear: return "GL(" + std::to_string(expr.degree()) + "," + std::to_string(expr.field()) + ")";
    case Kind::field_units: return "U(" + std::to_string(expr.field()) + ")";
    case Kind::field_additive: return "A(" + std::to_string(expr.field()) + ")";
    case Kind::product: {
        if (expr.children().empty())
            return "1";
        string s;
        for (size_t i = 0; i < expr.children().size(); ++i)
            s += (i ? " x " : "") + wrapped(expr.children()[i]);
        return s;
    }
    case Kind::wreath: return wrapped(expr.children()[0]) + " wr S" + std::to_string(expr.degree());
    case Kind::concrete: return "G<" + std::to_string(expr.table()->size()) + ">";
    case Kind::perm_sub: return "Stab<" + cdiag::to_string(expr.generators()->order) + ">";
    }
    return "?";
}

auto materialize(const GroupExpr & expr, size_t table_limit) -> CayleyTable
{
    using Kind = GroupExpr::Kind;
    auto n_big = order(expr);
    if (n_big > table_limit)
        throw LimitError("table_limit", table_limit, n_big > BigInt(std::numeric_limits<size_t>::max()) ? std::numeric_limits<size_t>::max() : static_cast<size_t>(n_big));
    auto n = static_cast<size_t>(n_big);

    switch (expr.kind()) {
    case Kind::trivial: return CayleyTable::from_table(1, {0});
    case Kind::symmetric: return table_of(permutations(expr.degree()), compose_permutations);
    case Kind::cyclic:
        return table_from_product(n, [n](uint32_t a, uint32_t b) { return static_cast<uint32_t>((a + b) % n); });
    case Kind::field_additive:
        return table_from_product(n, [n](uint32_t a, uint32_t b) { return static_cast<uint32_t>((a + b) % n); });
    case Kind::field_units: {
        auto q = static_cast<uint32_t>(expr.field());
        // element i stands for the unit i+1
        return table_from_product(n, [q](uint32_t a, uint32_t b) { return static_cast<uint32_t>((a + 1) * (b + 1) % q - 1); });
    }
    case Kind::general_linear: {
        int d = expr.degree(), q = expr.field();
        vector<Word> elements;
        Word m(d * d, 0);
        while (true) {
            if (mat_rank(m, d, q) == d)
                elements.push_back(m);
            int i = 0;
            while (i < d * d && m[i] == q - 1)
                m[i++] = 0;
            if (i == d * d)
                break;
            ++m[i];
        }
        return table_of(elements, [d, q](const Word & a, const Word & b) { return mat_mul(a, b, d, q); });
    }
    case Kind::product: {
        vector<CayleyTable> factors;
        for (const auto & c : expr.children())
            factors.push_back(materialize(c, table_limit));
        return table_from_product(n, [&factors](uint32_t a, uint32_t b) {
            uint32_t result = 0, scale = 1;
            for (const auto & f : factors) {
                auto s = static_cast<uint32_t>(f.size());
                result += f.multiply(a % s, b % s) * scale;
                a /= s;
                b /= s;
                scale *= s;
            }
            return result;
        });
    }
    case Kind::wreath: {
        auto base = materialize(expr.children()[0], table_limit);
        int k = expr.degree();
        auto b = static_cast<int>(base.size());
        vector<Word> elements;
        for (const auto & sigma : permutations(k)) {
            Word digits(k, 0);
            while (true) {
                Word e = digits;
                e.insert(e.end(), sigma.begin(), sigma.end());
                elements.push_back(e);
                int i = 0;
                while (i < k && digits[i] == b - 1)
                    digits[i++] = 0;
                if (i == k)
                    break;
                ++digits[i];
            }
        }
        // (h, s)(h', s') = (h . s(h'), s s') with s(h')_i = h'_{s^-1(i)}
        auto product = [&base, k](const Word & x, const Word & y) {
            Word r(2 * k);
            Word inverse_sigma(k);
            for (int i = 0; i < k; ++i)
                inverse_sigma[x[k + i]] = i;
            for (int i = 0; i < k; ++i)
                r[i] = static_cast<int>(base.multiply(x[i], y[inverse_sigma[i]]));
            for (int i = 0; i < k; ++i)
                r[k + i] = x[k + y[k + i]];
            return r;
        };
        return table_of(elements, product);
    }
    case Kind::concrete: return *expr.table();
    case Kind::perm_sub: return closure(*expr.generators(), table_limit);
    }
    throw InvalidArgument("unknown group expression");
}

auto to_string(IsoOutcome outcome) -> string
{
    switch (outcome) {
    case IsoOutcome::isomorphic: return "isomorphic";
    case IsoOutcome::not_isomorphic: return "not isomorphic";
    case IsoOutcome::undecided: return "undecided at configured limit";
    }
    return "?";
}

auto generating_set(const CayleyTable & t) -> vector<uint32_t>
{
    vector<uint32_t> candidates(t.size());
    std::iota(candidates.begin(), candidates.end(), 0u);
    vector<size_t> orders(t.size());
    for (uint32_t a = 0; a < t.size(); ++a)
        orders[a] = t.element_order(a);
    std::stable_sort(candidates.begin(), candidates.end(), [&](uint32_t a, uint32_t b) { return orders[a] > orders[b]; });

    vector<uint32_t> gens;
    auto member = subgroup_closure(t, gens);
    for (auto a : candidates)
        if (! member[a]) {
            gens.push_back(a);
            member = subgroup_closure(t, gens);
        }
    return gens;
}

namespace {

class IsoSearch
{
public:
    IsoSearch(const CayleyTable & a, const CayleyTable & b) :
        _a(a), _b(b), _gens(generating_set(a))
    {
        for (uint32_t x = 0; x < b.size(); ++x)
            _b_orders.push_back(b.element_order(x));
    }

    auto run() -> bool
    {
        vector<int> phi(_a.size(), -1);
        vector<bool> used(_b.size(), false);
        phi[_a.identity()] = static_cast<int>(_b.identity());
        used[_b.identity()] = true;
        return extend(0, phi, used);
    }

private:
    auto extend(size_t k, vector<int> & phi, vector<bool> & used) -> bool
    {
        if (k == _gens.size())
            return true;
        auto g = _gens[k];
        auto g_order = _a.element_order(g);
        for (uint32_t y = 0; y < _b.size(); ++y) {
            if (used[y] || _b_orders[y] != g_order)
                continue;
            auto phi2 = phi;
            auto used2 = used;
            if (close(k, g, y, phi2, used2) && extend(k + 1, phi2, used2)) {
                phi = std::move(phi2);
                used = std::move(used2);
                return true;
            }
        }
        return false;
    }

    // Extends phi from <g_0..g_{k-1}> to <g_0..g_k> with g_k -> y; false on any inconsistency.
    auto close(size_t k, uint32_t g, uint32_t y, vector<int> & phi, vector<bool> & used) -> bool
    {
        if (phi[g] != -1)
            return static_cast<uint32_t>(phi[g]) == y;
        phi[g] = static_cast<int>(y);
        used[y] = true;
        vector<uint32_t> queue;
        for (uint32_t x = 0; x < _a.size(); ++x)
            if (phi[x] != -1)
                queue.push_back(x);
        for (size_t at = 0; at < queue.size(); ++at) {
            auto x = queue[at];
            for (size_t i = 0; i <= k; ++i) {
                auto s = _gens[i];
                auto z = _a.multiply(x, s);
                auto w = _b.multiply(static_cast<uint32_t>(phi[x]), static_cast<uint32_t>(phi[s]));
                if (phi[z] == -1) {
                    if (used[w])
                        return false;
                    phi[z] = static_cast<int>(w);
                    used[w] = true;
                    queue.push_back(z);
                }
                else if (static_cast<uint32_t>(phi[z]) != w)
                    return false;
            }
        }
        return true;
    }

    const CayleyTable & _a;
    const CayleyTable & _b;
    vector<uint32_t> _gens;
    vector<size_t> _b_orders;
};

}

auto are_isomorphic(const CayleyTable & a, const CayleyTable & b, size_t iso_limit) -> IsoOutcome
{
    if (a.size() != b.size())
        return IsoOutcome::not_isomorphic;
    if (a.size() > iso_limit)
        return IsoOutcome::undecided;
    if (a.is_abelian() != b.is_abelian())
        return IsoOutcome::not_isomorphic;
    if (order_histogram(a) != order_histogram(b))
        return IsoOutcome::not_isomorphic;
    if (center_size(a) != center_size(b) || square_count(a) != square_count(b))
        return IsoOutcome::not_isomorphic;
    return IsoSearch(a, b).run() ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic;
}

namespace {

struct NamedFactor
{
    GroupExpr expr;
    size_t order;
};

auto named_factors() -> const vector<NamedFactor> &
{
    static const vector<NamedFactor> factors = [] {
        vector<NamedFactor> f;
        f.push_back({GroupExpr::symmetric(2), 2});
        for (int k = 3; k <= 12; ++k)
            f.push_back({GroupExpr::cyclic(k), static_cast<size_t>(k)});
        for (int k = 3; k <= 6; ++k)
            f.push_back({GroupExpr::symmetric(k), static_cast<size_t>(factorial(k))});
        return f;
    }();
    return factors;
}

void factor_candidates(size_t remaining, size_t start, int depth, vector<size_t> & current, vector<vector<size_t>> & out)
{
    if (remaining == 1) {
        if (! current.empty())
            out.push_back(current);
        return;
    }
    if (depth == 0)
        return;
    const auto & factors = named_factors();
    for (size_t i = start; i < factors.size(); ++i)
        if (remaining % factors[i].order == 0) {
            current.push_back(i);
            factor_candidates(remaining / factors[i].order, i, depth - 1, current, out);
            current.pop_back();
        }
}

}

auto identify_named(const CayleyTable & table) -> std::optional<GroupExpr>
{
    if (table.size() == 1)
        return GroupExpr::trivial();

    vector<vector<size_t>> candidates;
    vector<size_t> current;
    factor_candidates(table.size(), 0, 4, current, candidates);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto & x, const auto & y) { return x.size() < y.size(); });

    auto abelian = table.is_abelian();
    auto hist = order_histogram(table);
    const auto & factors = named_factors();
    for (const auto & c : candidates) {
        bool candidate_abelian = std::all_of(c.begin(), c.end(), [&](size_t i) {
            return factors[i].expr.kind() == GroupExpr::Kind::cyclic || factors[i].order == 2;
        });
        if (candidate_abelian != abelian)
            continue;
        vector<GroupExpr> parts;
        for (auto i : c)
            parts.push_back(factors[i].expr);
        auto expr = parts.size() == 1 ? parts[0] : GroupExpr::product(parts);
        auto t = materialize(expr, table.size());
        if (order_histogram(t) != hist)
            continue;
        if (are_isomorphic(t, table, table.size()) == IsoOutcome::isomorphic)
            return expr;
    }
    return std::nullopt;
}

}
