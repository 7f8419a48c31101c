#include <cdiag/classifying.hpp>
#include <cdiag/finset.hpp>
#include <cdiag/finvect.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace cdiag {
namespace {

auto s3_category() -> FiniteCategory { return one_object_group(CayleyTable::from_table(6, oracle::s3_table())); }

TEST(Decomposition, OrdinalLevels)
{
    auto d = level_decomposition(ordinal(3), 2);
    EXPECT_EQ(d.chain_count, 20u);
    EXPECT_EQ(d.components.size(), 20u);
    for (const auto & c : d.components) {
        EXPECT_EQ(c.orbit.stabilizer.order, 1);
        EXPECT_EQ(c.group_text(), "1");
    }
}

TEST(Decomposition, GroupNamesAreIdentified)
{
    auto d = level_decomposition(s3_category(), 2);
    ASSERT_EQ(d.components.size(), 1u);
    EXPECT_EQ(d.components[0].group_text(), "S3");
    EXPECT_EQ(d.components[0].policy, "isomorphism");
}

TEST(Decomposition, LargeStabilizerFallsBackToOrder)
{
    Limits limits;
    limits.iso_limit = 4;
    auto d = level_decomposition(s3_category(), 1, limits);
    ASSERT_EQ(d.components.size(), 1u);
    EXPECT_EQ(d.components[0].policy, "order");
    EXPECT_EQ(d.components[0].orbit.stabilizer.order, 6);
}

TEST(Segal, CountsAndBijection)
{
    auto s = segal_check(s3_category(), 2);
    EXPECT_EQ(s.chain_count, 36u);
    EXPECT_EQ(s.fiber_product_count, 36u);
    EXPECT_TRUE(s.ok());
    auto t = segal_check(ordinal(3), 3);
    EXPECT_EQ(t.chain_count, 35u);
    EXPECT_TRUE(t.ok());
    EXPECT_THROW(segal_check(ordinal(1), 1), InvalidArgument);
}

TEST(Completeness, IntervalGroupoid)
{
    auto g = interval_groupoid(iso_interval());
    // isos of I[1]: id_x, id_y, f, g
    EXPECT_EQ(g.object_count(), 4);
    EXPECT_TRUE(g.is_groupoid());
    EXPECT_NO_THROW(check_axioms(g));

    auto s3 = interval_groupoid(s3_category());
    EXPECT_EQ(s3.object_count(), 6);
    EXPECT_EQ(s3.morphism_count(), 216); // beta = p' alpha p^{-1}: |S3| morphisms between any two objects
    EXPECT_THROW(interval_groupoid(s3_category(), 10), LimitError);
}

TEST(Completeness, VerdictOnSmallCategories)
{
    for (const auto & cat : {ordinal(2), walking_arrow(), iso_interval(), s3_category(), finset_skeleton(2)}) {
        auto c = completeness_check(cat);
        EXPECT_TRUE(c.verdict());
        EXPECT_EQ(c.iso_classes.size(), c.interval_classes.size());
        EXPECT_EQ(c.order_only_pairs, 0u);
    }
}

TEST(Discreteness, WalkingArrowAndGroup)
{
    auto arrow = is_discrete_classifying(walking_arrow(), 3);
    EXPECT_TRUE(arrow.only_identity_isos);
    EXPECT_TRUE(arrow.consistent());
    ASSERT_EQ(arrow.levels.size(), 4u);
    EXPECT_EQ(arrow.levels[0].components, 2u);
    EXPECT_EQ(arrow.levels[1].components, 3u);

    auto group = is_discrete_classifying(one_object_group(CayleyTable::from_table(2, oracle::cyclic_table(2))), 2);
    EXPECT_FALSE(group.only_identity_isos);
    EXPECT_TRUE(group.consistent());
    EXPECT_FALSE(group.levels[0].all_singleton_trivial);
    EXPECT_THROW(is_discrete_classifying(walking_arrow(), 0), InvalidArgument);
}

TEST(Nerve, LevelSizesAndIdentities)
{
    auto s = nerve_truncation(s3_category(), 3);
    EXPECT_EQ(s.truncation(), 3);
    EXPECT_EQ(s.level_size(0), 1u);
    EXPECT_EQ(s.level_size(1), 6u);
    EXPECT_EQ(s.level_size(3), 216u);
    EXPECT_GT(s.identity_checks(), 0u);
    EXPECT_TRUE(s.identity_failures().empty());

    auto interval = nerve_truncation(iso_interval(), 2);
    EXPECT_EQ(interval.level_size(1), 4u);
    EXPECT_EQ(interval.level_size(2), 8u);
    EXPECT_TRUE(interval.identity_failures().empty());
}

TEST(Nerve, FaceMapsCompose)
{
    auto s = nerve_truncation(s3_category(), 2);
    auto cat = s3_category();
    // d_1 of (f, g) is the composite g o f
    for (std::size_t i = 0; i < s.level_size(2); ++i) {
        const auto & c = s.simplices[2][i];
        const auto & d1 = s.simplices[1][s.faces[2][1][i]];
        EXPECT_EQ(d1.morphisms[0], cat.compose(c.morphisms[1], c.morphisms[0]));
    }
}

TEST(Nerve, RejectsNonGroupoidsAndDeepTruncations)
{
    EXPECT_THROW(nerve_truncation(walking_arrow(), 2), InvalidArgument);
    EXPECT_THROW(nerve_truncation(s3_category(), 6), LimitError);
}

TEST(FaceDegeneracy, WellDefinedOnComponents)
{
    for (const auto & cat : {ordinal(2), iso_interval(), s3_category(), finset_skeleton(2)}) {
        auto r = face_degeneracy_report(cat);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.faces.size(), r.level1.components.size());
        EXPECT_EQ(r.degeneracies.size(), r.level0.components.size());
    }
}

}
}
