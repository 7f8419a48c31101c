#include <cdiag/catdef.hpp>
#include <cdiag/fincat.hpp>
#include <cdiag/groups.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cdiag {
namespace {

TEST(FiniteCategory, OrdinalHasMonotoneHomCounts)
{
    for (int m = 0; m <= 8; ++m) {
        auto cat = ordinal(m);
        EXPECT_EQ(cat.object_count(), m + 1);
        EXPECT_EQ(cat.morphism_count(), (m + 1) * (m + 2) / 2);
        EXPECT_NO_THROW(check_axioms(cat));
        for (ObjectId x = 0; x <= m; ++x)
            for (ObjectId y = 0; y <= m; ++y)
                EXPECT_EQ(cat.hom(x, y).size(), x <= y ? 1u : 0u);
    }
}

TEST(FiniteCategory, TruncatedDeltaMatchesBruteForce)
{
    auto cat = truncated_delta(2);
    EXPECT_NO_THROW(check_axioms(cat));
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            EXPECT_EQ(cat.hom(n, m).size(), oracle::monotone_maps(n, m)) << n << "->" << m;
    EXPECT_EQ(cat.morphism_count(), 31);
}

TEST(FiniteCategory, SmallBuiltins)
{
    auto arrow = walking_arrow();
    EXPECT_EQ(arrow.morphism_count(), 3);
    EXPECT_FALSE(arrow.is_groupoid());
    EXPECT_FALSE(is_isomorphism(arrow, "f"));

    auto interval = iso_interval();
    EXPECT_TRUE(interval.is_groupoid());
    EXPECT_TRUE(is_isomorphism(interval, "f"));
    auto f = *interval.find_morphism("f");
    auto g = *interval.find_morphism("g");
    EXPECT_EQ(interval.inverse(f), g);
    EXPECT_EQ(interval.compose(g, f), interval.identity(0));
}

TEST(FiniteCategory, ComposeRejectsNonComposablePair)
{
    auto arrow = walking_arrow();
    auto f = *arrow.find_morphism("f");
    EXPECT_THROW(arrow.compose(f, f), InvalidArgument);
}

TEST(FiniteCategory, IdentityLawViolationIsNamed)
{
    // id_x o f returns the wrong morphism.
    std::vector<Morphism> morphisms{{"id_x", 0, 0}, {"f", 0, 0}, {"g", 0, 0}};
    auto compose = [](MorphismId g, MorphismId f) -> MorphismId {
        if (g == 0)
            return f == 1 ? 2 : f;
        if (f == 0)
            return g;
        return 1;
    };
    FiniteCategory cat({"x"}, morphisms, {0}, compose);
    try {
        check_axioms(cat);
        FAIL() << "expected ValidationError";
    }
    catch (const ValidationError & e) {
        EXPECT_NE(std::string(e.what()).find("identity law"), std::string::npos) << e.what();
    }
}

TEST(Catdef, ParsesAndRoundTrips)
{
    auto cat = validate_category(parse_catdef(R"(# a commutative triangle
object a
object b
object c
mor f : a -> b
mor g : b -> c
mor h : a -> c
compose g f = h
)"));
    EXPECT_EQ(cat.object_count(), 3);
    EXPECT_EQ(cat.morphism_count(), 6);
    EXPECT_EQ(cat.compose(*cat.find_morphism("g"), *cat.find_morphism("f")), *cat.find_morphism("h"));
    auto again = validate_category(parse_catdef(to_catdef(cat)));
    EXPECT_TRUE(structurally_equal(cat, again));
}

TEST(Catdef, ParseErrorsCarryLineNumbers)
{
    try {
        parse_catdef("object x\n\nmor f : x -> y\n");
        FAIL() << "expected ParseError";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("'y'"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_catdef("object x\nobject x\n"), ParseError);
    EXPECT_THROW(parse_catdef("object id_x\n"), ParseError);
    EXPECT_THROW(parse_catdef("widget w\n"), ParseError);
    EXPECT_THROW(parse_catdef("object x\nmor f x -> x\n"), ParseError);
}

TEST(Catdef, UndeclaredComposeTargetIsNamed)
{
    try {
        parse_catdef("object x\nmor f : x -> x\ncompose f f = k\n");
        FAIL() << "expected ParseError";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("'k'"), std::string::npos) << e.what();
    }
}

TEST(Catdef, MissingCompositeFails)
{
    EXPECT_THROW(validate_category(parse_catdef("object x\nmor f : x -> x\n")), ValidationError);
}

TEST(Catdef, AssociativityFailureNamesTriple)
{
    // a a = b, a b = a, b a = b, b b = b: (a b) a = b but a (b a) = a.
    auto def = parse_catdef(R"(object x
mor a : x -> x
mor b : x -> x
compose a a = b
compose a b = a
compose b a = b
compose b b = b
)");
    try {
        validate_category(def);
        FAIL() << "expected ValidationError";
    }
    catch (const ValidationError & e) {
        EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos) << e.what();
    }
}

TEST(FiniteCategory, MaximalSubgroupoidAndOpposite)
{
    auto arrow = walking_arrow();
    auto core = maximal_subgroupoid(arrow);
    EXPECT_EQ(core.morphism_count(), 2);
    EXPECT_TRUE(core.is_groupoid());
    EXPECT_TRUE(structurally_equal(maximal_subgroupoid(core), core));

    auto op = opposite(arrow);
    auto f = *op.find_morphism("f");
    EXPECT_EQ(op.source(f), *op.find_object("y"));
    EXPECT_TRUE(structurally_equal(opposite(op), arrow));
}

TEST(FiniteCategory, OneObjectGroup)
{
    auto s3 = CayleyTable::from_table(6, oracle::s3_table());
    auto cat = one_object_group(s3);
    EXPECT_EQ(cat.object_count(), 1);
    EXPECT_EQ(cat.morphism_count(), 6);
    EXPECT_TRUE(cat.is_groupoid());
    EXPECT_NO_THROW(check_axioms(cat));
    EXPECT_EQ(cat.automorphisms(0).size(), 6u);
}

TEST(FiniteCategory, PerturbedCompositeIsRejected)
{
    std::mt19937 rng(20261014);
    auto base = ordinal(3);
    auto s3 = one_object_group(CayleyTable::from_table(6, oracle::s3_table()));
    for (const auto & cat : {s3, truncated_delta(1)}) {
        std::vector<Morphism> morphisms;
        std::vector<MorphismId> identities;
        std::vector<std::string> objects;
        for (ObjectId x = 0; x < cat.object_count(); ++x) {
            objects.push_back(cat.object_name(x));
            identities.push_back(cat.identity(x));
        }
        for (MorphismId f = 0; f < cat.morphism_count(); ++f)
            morphisms.push_back(cat.morphism(f));
        // pick a composable pair of non-identities and redirect its composite
        std::vector<std::pair<MorphismId, MorphismId>> pairs;
        for (MorphismId f = 0; f < cat.morphism_count(); ++f)
            for (MorphismId g : cat.outgoing(cat.target(f)))
                if (cat.hom(cat.source(f), cat.target(g)).size() > 1)
                    pairs.emplace_back(g, f);
        ASSERT_FALSE(pairs.empty());
        for (int trial = 0; trial < 20; ++trial) {
            auto [g0, f0] = pairs[rng() % pairs.size()];
            auto hom = cat.hom(cat.source(f0), cat.target(g0));
            auto right = cat.compose(g0, f0);
            MorphismId wrong = right;
            while (wrong == right)
                wrong = hom[rng() % hom.size()];
            auto compose = [cat, g0, f0, wrong](MorphismId g, MorphismId f) {
                return g == g0 && f == f0 ? wrong : cat.compose_unchecked(g, f);
            };
            FiniteCategory perturbed(objects, morphisms, identities, compose);
            EXPECT_THROW(check_axioms(perturbed), ValidationError);
        }
    }
    EXPECT_NO_THROW(check_axioms(base));
}

TEST(Equivalence, SkeletalInvariants)
{
    auto a = check_equivalence_invariants(iso_interval(), ordinal(0));
    EXPECT_TRUE(a.invariants_match());
    auto b = check_equivalence_invariants(walking_arrow(), ordinal(0));
    EXPECT_FALSE(b.class_count_matches);
    auto c2 = one_object_group(CayleyTable::from_table(2, oracle::cyclic_table(2)));
    auto c = check_equivalence_invariants(c2, ordinal(0));
    EXPECT_TRUE(c.class_count_matches);
    EXPECT_FALSE(c.aut_orders_match);
}

}
}
