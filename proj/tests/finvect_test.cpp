#include <cdiag/chains.hpp>
#include <cdiag/finvect.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace cdiag {
namespace {

auto to_oracle(const MatrixFq & a) -> oracle::Mat { return {a.rows(), a.cols(), a.entries()}; }

TEST(MatrixFq, Arithmetic)
{
    MatrixFq a(2, 2, 3, {1, 2, 0, 1});
    auto inv = a.inverse();
    EXPECT_EQ(a * inv, MatrixFq::identity(2, 3));
    EXPECT_EQ(a.rank(), 2);
    EXPECT_EQ(MatrixFq(2, 2, 3, {1, 2, 2, 1}).rank(), 1);
    EXPECT_EQ(MatrixFq(2, 2, 5, {-1, 7, 0, 5}).entries(), (std::vector<int>{4, 2, 0, 0}));
    EXPECT_EQ(a.transpose(), MatrixFq(2, 2, 3, {1, 0, 2, 1}));
    EXPECT_EQ(to_string(MatrixFq::identity(2, 2)), "[[1,0],[0,1]]");
    EXPECT_THROW(MatrixFq(1, 1, 4, {1}), InvalidArgument);
}

TEST(MatrixFq, IndexRoundTrip)
{
    for (long long i = 0; i < 81; ++i)
        EXPECT_EQ(MatrixFq::from_index(2, 2, 3, i).index(), i);
    EXPECT_EQ(MatrixFq::from_index(1, 2, 3, 1), MatrixFq(1, 2, 3, {0, 1}));
}

TEST(GeneralLinear, OrdersAgreeWithDeterminantCount)
{
    for (int q : {2, 3, 5}) {
        EXPECT_EQ(glnq_order(1, q), q - 1);
        EXPECT_EQ(general_linear_elements(2, q).size(), oracle::gl(2, q).size());
        EXPECT_EQ(glnq_order(2, q), BigInt(oracle::gl(2, q).size()));
    }
    EXPECT_EQ(glnq_order(0, 2), 1);
    EXPECT_EQ(glnq_order(3, 2), 168);
    EXPECT_EQ(glnq_order(4, 3), BigInt(24261120));
}

TEST(RankOrbits, CellsMatchBruteForce)
{
    for (int q : {2, 3})
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m) {
                auto cell = orbits_by_rank(n, m, q);
                EXPECT_TRUE(cell.rank_is_complete_invariant);
                std::vector<std::size_t> sizes;
                for (const auto & c : cell.classes) {
                    sizes.push_back(c.orbit_size);
                    EXPECT_EQ(c.orbit_size, c.class_size);
                    EXPECT_EQ(c.stabilizer_order, oracle::matrix_stabilizer(to_oracle(c.representative), q));
                }
                std::sort(sizes.begin(), sizes.end());
                EXPECT_EQ(sizes, oracle::matrix_orbit_sizes(n, m, q)) << n << "," << m << " q=" << q;
            }
}

TEST(RankOrbits, EnumerationBound)
{
    EXPECT_THROW(orbits_by_rank(3, 3, 5, {}, 1000), LimitError);
}

TEST(Stabilizers, ClosedFormOrders)
{
    for (int q : {2, 3, 5}) {
        BigInt u = q - 1;
        for (const auto & s : named_stabilizers_dim_le2(q)) {
            EXPECT_EQ(s.order, order(s.group)) << s.label;
            if (s.label == "[1;0]")
                EXPECT_EQ(s.order, u * u * q);
            if (s.label == "diag(1,0)")
                EXPECT_EQ(s.order, u * u * u * q * q);
        }
    }
}

TEST(Stabilizers, ParameterizationEqualsScan)
{
    for (int q : {2, 3}) {
        for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 2}}) {
            auto param = parameterized_stabilizer(n, m, q);
            auto a = MatrixFq::rank_representative(m, n, 1, q);
            EXPECT_EQ(param.size(), oracle::matrix_stabilizer(to_oracle(a), q));
            for (const auto & [p, g] : param)
                EXPECT_EQ(g * a, a * p);
        }
    }
}

TEST(Stabilizers, NamedGroups)
{
    auto g = named_vect_group(2, 2, 2, 3);
    ASSERT_TRUE(g);
    EXPECT_EQ(to_string(*g), "GL(2,3)");
    auto r0 = named_vect_group(1, 2, 0, 5);
    ASSERT_TRUE(r0);
    EXPECT_EQ(order(*r0), BigInt(4) * 480);
    EXPECT_FALSE(named_vect_group(3, 2, 1, 2));
}

TEST(Vect, SkeletonAndLevelZero)
{
    auto cat = vect_skeleton(2, 2);
    EXPECT_EQ(cat.object_count(), 3);
    EXPECT_EQ(cat.automorphisms(2).size(), 6u);
    EXPECT_NO_THROW(check_axioms(cat));
    auto f = cat.hom(1, 2)[1];
    EXPECT_EQ(matrix_of(cat, f, 2).rows(), 2);
    auto l0 = vect_level0(2, 3);
    ASSERT_EQ(l0.size(), 3u);
    EXPECT_EQ(l0[2].order, 48);
}

TEST(Vect, OracleDiffIsClean)
{
    for (int q : {2, 3}) {
        auto d = oracle_diff_vect(2, q);
        EXPECT_EQ(d.mismatches, 0u) << "q=" << q;
        EXPECT_TRUE(d.problems.empty());
    }
}

}
}
