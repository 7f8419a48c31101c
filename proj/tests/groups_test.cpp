#include <cdiag/groups.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cdiag {
namespace {

auto s3() -> CayleyTable { return CayleyTable::from_table(6, oracle::s3_table()); }
auto cyclic(std::uint32_t n) -> CayleyTable { return CayleyTable::from_table(n, oracle::cyclic_table(n)); }

TEST(CayleyTable, ValidatesAxioms)
{
    auto g = s3();
    EXPECT_EQ(g.size(), 6u);
    EXPECT_FALSE(g.is_abelian());
    EXPECT_EQ(g.element_order(1), 2u);
    EXPECT_EQ(g.element_order(4), 3u);
    EXPECT_TRUE(cyclic(5).is_abelian());

    auto bad = oracle::cyclic_table(3);
    bad[4] = 0; // 1 + 1 = 0 breaks the Latin square
    EXPECT_THROW(CayleyTable::from_table(3, bad), ValidationError);
    EXPECT_THROW(CayleyTable::from_table(3, {0, 1}), ValidationError);
}

TEST(CayleyTable, RejectsNonAssociativeLatinSquare)
{
    // A loop of order 5 that is not a group.
    std::vector<std::uint32_t> loop{
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0};
    EXPECT_THROW(CayleyTable::from_table(5, loop), ValidationError);
}

TEST(GroupExpr, OrdersAndText)
{
    EXPECT_EQ(order(GroupExpr::trivial()), 1);
    EXPECT_EQ(order(GroupExpr::symmetric(0)), 1);
    EXPECT_EQ(order(GroupExpr::symmetric(5)), 120);
    EXPECT_EQ(order(GroupExpr::cyclic(7)), 7);
    EXPECT_EQ(order(GroupExpr::general_linear(2, 3)), 48);
    EXPECT_EQ(order(GroupExpr::general_linear(3, 2)), 168);
    EXPECT_EQ(order(GroupExpr::field_units(5)), 4);
    EXPECT_EQ(order(GroupExpr::field_additive(5)), 5);
    // |L wr S_k| = |L|^k k!
    EXPECT_EQ(order(GroupExpr::wreath(GroupExpr::symmetric(3), 4)), BigInt(1296) * 24);
    auto product = GroupExpr::product({GroupExpr::wreath(GroupExpr::symmetric(2), 2), GroupExpr::wreath(GroupExpr::symmetric(4), 2)});
    EXPECT_EQ(order(product), BigInt(8) * 1152);
    EXPECT_EQ(to_string(product), "(S2 wr S2) x (S4 wr S2)");
    EXPECT_EQ(to_string(GroupExpr::general_linear(2, 3)), "GL(2,3)");
    EXPECT_EQ(to_string(GroupExpr::field_units(5)), "U(5)");
    EXPECT_EQ(to_string(GroupExpr::trivial()), "1");
    EXPECT_THROW(order(GroupExpr::general_linear(2, 4)), InvalidArgument);
}

TEST(GroupExpr, BigOrdersStayExact)
{
    auto big = GroupExpr::wreath(GroupExpr::symmetric(6), 6);
    BigInt expected = 1;
    for (int i = 0; i < 6; ++i)
        expected *= 720;
    expected *= 720;
    EXPECT_EQ(order(big), expected);
    EXPECT_THROW(materialize(big, 1000), LimitError);
}

TEST(GroupExpr, MaterializeMatchesOrder)
{
    std::vector<GroupExpr> exprs{GroupExpr::trivial(), GroupExpr::symmetric(4), GroupExpr::cyclic(6),
        GroupExpr::general_linear(2, 2), GroupExpr::general_linear(2, 3), GroupExpr::field_units(5),
        GroupExpr::field_additive(3), GroupExpr::wreath(GroupExpr::symmetric(2), 3),
        GroupExpr::product({GroupExpr::symmetric(3), GroupExpr::cyclic(2)})};
    for (const auto & e : exprs)
        EXPECT_EQ(BigInt(materialize(e).size()), order(e)) << to_string(e);
}

TEST(Isomorphism, KnownPairs)
{
    EXPECT_EQ(are_isomorphic(s3(), materialize(GroupExpr::symmetric(3))), IsoOutcome::isomorphic);
    EXPECT_EQ(are_isomorphic(s3(), cyclic(6)), IsoOutcome::not_isomorphic);
    EXPECT_EQ(are_isomorphic(materialize(GroupExpr::general_linear(2, 2)), s3()), IsoOutcome::isomorphic);
    EXPECT_EQ(are_isomorphic(cyclic(6), materialize(GroupExpr::product({GroupExpr::cyclic(2), GroupExpr::cyclic(3)}))),
        IsoOutcome::isomorphic);
    EXPECT_EQ(are_isomorphic(cyclic(4), materialize(GroupExpr::product({GroupExpr::cyclic(2), GroupExpr::cyclic(2)}))),
        IsoOutcome::not_isomorphic);
    // S4 and SL(2,3) share the order 24 but not the type
    auto s4 = materialize(GroupExpr::symmetric(4));
    auto d12xc2 = materialize(GroupExpr::product({GroupExpr::symmetric(3), GroupExpr::cyclic(4)}));
    EXPECT_EQ(are_isomorphic(s4, d12xc2), IsoOutcome::not_isomorphic);
    EXPECT_EQ(are_isomorphic(s4, s4, 10), IsoOutcome::undecided);
    EXPECT_EQ(are_isomorphic(s4, cyclic(5), 1), IsoOutcome::not_isomorphic);
}

TEST(Isomorphism, EquivalenceRelationOnPool)
{
    std::vector<CayleyTable> pool{cyclic(4), materialize(GroupExpr::product({GroupExpr::cyclic(2), GroupExpr::cyclic(2)})),
        materialize(GroupExpr::field_units(5)), s3(), materialize(GroupExpr::general_linear(2, 2)), cyclic(6),
        materialize(GroupExpr::product({GroupExpr::cyclic(3), GroupExpr::cyclic(2)})),
        materialize(GroupExpr::wreath(GroupExpr::symmetric(2), 2)), materialize(GroupExpr::cyclic(8))};
    auto iso = [&](std::size_t i, std::size_t j) { return are_isomorphic(pool[i], pool[j]) == IsoOutcome::isomorphic; };
    for (std::size_t i = 0; i < pool.size(); ++i) {
        EXPECT_TRUE(iso(i, i));
        for (std::size_t j = 0; j < pool.size(); ++j) {
            EXPECT_EQ(iso(i, j), iso(j, i));
            for (std::size_t k = 0; k < pool.size(); ++k)
                if (iso(i, j) && iso(j, k))
                    EXPECT_TRUE(iso(i, k));
        }
    }
}

TEST(Isomorphism, RelabelledTablesAreIsomorphic)
{
    std::mt19937 rng(7);
    for (const auto & g : {s3(), materialize(GroupExpr::general_linear(2, 3)), materialize(GroupExpr::symmetric(4))}) {
        auto n = static_cast<std::uint32_t>(g.size());
        std::vector<std::uint32_t> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0u);
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<std::uint32_t> table(n * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                table[relabel[a] * n + relabel[b]] = relabel[g.multiply(a, b)];
        EXPECT_EQ(are_isomorphic(g, CayleyTable::from_table(n, table)), IsoOutcome::isomorphic);
    }
}

TEST(Groups, IdentifyNamed)
{
    auto named = identify_named(s3());
    ASSERT_TRUE(named);
    EXPECT_EQ(to_string(*named), "S3");
    named = identify_named(cyclic(1));
    ASSERT_TRUE(named);
    EXPECT_EQ(order(*named), 1);
    named = identify_named(materialize(GroupExpr::product({GroupExpr::cyclic(2), GroupExpr::cyclic(2)})));
    ASSERT_TRUE(named);
    EXPECT_EQ(order(*named), 4);
}

TEST(Groups, ClosureBuildsSymmetricGroup)
{
    // S4 from a transposition and a 4-cycle, as permutation words
    WordProduct compose = [](const Word & a, const Word & b) {
        Word r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[b[i]];
        return r;
    };
    auto table = closure({{1, 0, 2, 3}, {1, 2, 3, 0}}, {0, 1, 2, 3}, compose, 100);
    EXPECT_EQ(table.size(), 24u);
    EXPECT_EQ(are_isomorphic(table, materialize(GroupExpr::symmetric(4))), IsoOutcome::isomorphic);
    EXPECT_THROW(closure({{1, 0, 2, 3}, {1, 2, 3, 0}}, {0, 1, 2, 3}, compose, 10), LimitError);
    auto gens = generating_set(table);
    EXPECT_LE(gens.size(), 2u);
}

TEST(Groups, MatchGroups)
{
    std::size_t order_only = 0;
    EXPECT_TRUE(match_groups({s3(), cyclic(2)}, {cyclic(2), materialize(GroupExpr::symmetric(3))}, 512, order_only));
    EXPECT_EQ(order_only, 0u);
    EXPECT_FALSE(match_groups({s3()}, {cyclic(6)}, 512, order_only));
    EXPECT_TRUE(match_groups({s3()}, {cyclic(6)}, 4, order_only));
    EXPECT_EQ(order_only, 1u);
}

TEST(Groups, IsPrime)
{
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(5));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(4));
}

}
}
