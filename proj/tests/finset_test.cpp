#include <cdiag/chains.hpp>
#include <cdiag/finset.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

namespace cdiag {
namespace {

TEST(Finset, SkeletonSize)
{
    auto cat = finset_skeleton(3);
    EXPECT_EQ(cat.object_count(), 4);
    // sum over n, m <= 3 of m^n
    std::size_t total = 0;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            total += oracle::functions(n, m).size();
    EXPECT_EQ(static_cast<std::size_t>(cat.morphism_count()), total);
    EXPECT_NO_THROW(check_axioms(finset_skeleton(2)));
    EXPECT_THROW(finset_skeleton(7), LimitError);
}

TEST(Finset, VariantsRestrictMorphisms)
{
    auto inj = finset_skeleton(3, FunctionClass::injective);
    auto surj = finset_skeleton(3, FunctionClass::surjective);
    EXPECT_EQ(inj.hom(2, 3).size(), 6u);
    EXPECT_EQ(inj.hom(3, 2).size(), 0u);
    EXPECT_EQ(surj.hom(3, 2).size(), 6u);
    EXPECT_EQ(surj.hom(2, 3).size(), 0u);
    for (MorphismId f : inj.hom(2, 3)) {
        auto t = function_of(inj, f);
        EXPECT_NE(t[0], t[1]);
    }
}

TEST(Finset, ProfileOf)
{
    std::vector<int> f{0, 0, 2};
    auto p = profile_of(f, 4);
    EXPECT_EQ(p.k, (std::vector<int>{2, 1, 1, 0}));
    EXPECT_TRUE(p.is_valid());
    EXPECT_EQ(to_string(p), "(2,1,1,0)");
}

TEST(Finset, EnumerateProfiles)
{
    // n = 4, m = 2: (0,0,2,0,0), (0,1,0,1,0), (1,0,0,0,1)
    auto all = enumerate_profiles(4, 2);
    ASSERT_EQ(all.size(), 3u);
    for (const auto & p : all)
        EXPECT_TRUE(p.is_valid());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(enumerate_profiles(2, 0).size(), 0u);
    ASSERT_EQ(enumerate_profiles(0, 0).size(), 1u);
    EXPECT_EQ(enumerate_profiles(0, 0)[0].k, std::vector<int>{0});
}

TEST(Finset, TreeDisplayAndGroup)
{
    RootedTree2 tree{FiberProfile{4, 2, {0, 0, 2, 0, 0}}};
    EXPECT_EQ(tree.display(), "G(2,2)");
    EXPECT_EQ(to_string(tree.automorphism_group()), "S2 wr S2");
    EXPECT_EQ((RootedTree2{FiberProfile{0, 0, {0}}}.display()), "G(0,0)");
    auto g = wreath_group(FiberProfile{3, 3, {1, 1, 1, 0}});
    EXPECT_EQ(order(g), 2);
}

TEST(Finset, CountingIdentity)
{
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m) {
            BigInt sum = 0;
            for (const auto & c : closed_form_level1(n, m))
                sum += c.orbit_size;
            EXPECT_EQ(sum, BigInt(oracle::power(m, n))) << n << "," << m;
        }
}

TEST(Finset, ClosedFormMatchesOracleStabilizers)
{
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            std::vector<std::pair<std::size_t, std::size_t>> symbolic;
            for (const auto & c : closed_form_level1(n, m))
                symbolic.emplace_back(static_cast<std::size_t>(c.orbit_size), static_cast<std::size_t>(c.order));
            std::sort(symbolic.begin(), symbolic.end());
            EXPECT_EQ(symbolic, oracle::function_orbits(n, m)) << n << "->" << m;
        }
}

TEST(Finset, LevelZero)
{
    auto l0 = closed_form_level0(4);
    ASSERT_EQ(l0.size(), 5u);
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(l0[n].order, BigInt(oracle::factorial(n)));
}

TEST(Finset, InjectiveAndSurjective)
{
    auto inj = injective_level1(1, 3);
    ASSERT_EQ(inj.size(), 1u);
    // brute force: stabilizer of an injection 1 -> 3 has order 1! * 2! = 2
    EXPECT_EQ(inj[0].component.order, 2);
    EXPECT_EQ(oracle::function_stabilizer({0}, 3), 2u);
    EXPECT_FALSE(inj[0].stated_group_agrees);
    EXPECT_TRUE(injective_level1(2, 2)[0].stated_group_agrees);
    EXPECT_TRUE(injective_level1(3, 2).empty());

    auto surj = surjective_level1(4, 2);
    ASSERT_EQ(surj.size(), 2u);
    for (const auto & c : surj)
        EXPECT_EQ(c.profile.k[0], 0);
    EXPECT_TRUE(surjective_level1(2, 3).empty());
    EXPECT_EQ(surjective_level1(0, 0).size(), 1u);
}

TEST(Finset, OracleDiffIsClean)
{
    for (auto variant : {FunctionClass::all, FunctionClass::injective, FunctionClass::surjective}) {
        auto d = oracle_diff_finset(4, variant);
        EXPECT_EQ(d.mismatches, 0u) << to_string(variant);
        EXPECT_TRUE(d.problems.empty());
        for (const auto & row : d.rows)
            EXPECT_TRUE(row.matches) << row.n << "->" << row.m << " " << row.key << " " << row.detail;
    }
}

TEST(Finset, ParseFunctionClass)
{
    EXPECT_EQ(parse_function_class("inj"), FunctionClass::injective);
    EXPECT_EQ(parse_function_class("surj"), FunctionClass::surjective);
    EXPECT_EQ(parse_function_class("all"), FunctionClass::all);
    EXPECT_THROW(parse_function_class("bij"), InvalidArgument);
}

}
}
