#include <duval/abelian_lattice.hpp>
#include <duval/coset_oracle.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace duval;

TEST(FinAbGroup, CanonicalisesCyclicOrders) {
    auto g = FinAbGroup::from_cyclic_orders(1, {4, 6, 1, 0});
    EXPECT_EQ(g.free_rank(), 2u);
    ASSERT_EQ(g.invariant_factors().size(), 2u);
    EXPECT_EQ(g.invariant_factors()[0], 2);
    EXPECT_EQ(g.invariant_factors()[1], 12);
    EXPECT_EQ(g.to_string(), "Z^2 + Z/2 + Z/12");
}

TEST(FinAbGroup, CoprimeFactorsMerge) {
    EXPECT_EQ(FinAbGroup::from_cyclic_orders(0, {2, 3}), FinAbGroup::cyclic(6));
    EXPECT_EQ(FinAbGroup::from_cyclic_orders(0, {4, 6, 10}).to_string(), "Z/2 + Z/2 + Z/60");
}

TEST(FinAbGroup, TrivialPrintsZero) {
    EXPECT_EQ(FinAbGroup::trivial().to_string(), "0");
    EXPECT_TRUE(FinAbGroup::from_cyclic_orders(0, {1, 1}).is_trivial());
    EXPECT_EQ(FinAbGroup::free(1).to_string(), "Z");
}

TEST(Smith, DiagonalExamples) {
    auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto d = elementary_divisors(a);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], 2);
    EXPECT_EQ(d[1], 6);
    EXPECT_EQ(d[2], 12);
}

TEST(Smith, TransformsAreUnimodularAndReproduce) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-9, 9), dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
        auto sd = smith_normal_form(a);
        EXPECT_EQ(sd.u * a * sd.v, sd.s);
        EXPECT_EQ(abs(sd.u.determinant()), 1);
        EXPECT_EQ(abs(sd.v.determinant()), 1);
        auto diag = sd.diagonal();
        for (std::size_t k = 0; k + 1 < diag.size(); ++k)
            if (diag[k + 1] != 0) {
                EXPECT_EQ(diag[k + 1] % diag[k], 0);
            }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) {
                    EXPECT_EQ(sd.s(i, j), 0);
                }
    }
}

TEST(Smith, RankAndDeterminant) {
    auto a = IntMatrix::from_rows({{1, 2}, {2, 4}});
    EXPECT_EQ(rank(a), 1u);
    EXPECT_EQ(a.determinant(), 0);
    EXPECT_EQ(IntMatrix::from_rows({{2, 1}, {1, 2}}).determinant(), 3);
}

TEST(Cokernel, ColumnOfExponents) {
    EXPECT_EQ(cokernel(IntMatrix::from_rows({{3}})), FinAbGroup::cyclic(3));
    EXPECT_EQ(cokernel(IntMatrix::from_rows({{2}, {1}})), FinAbGroup::free(1));
    EXPECT_EQ(cokernel(IntMatrix::from_rows({{3}, {3}})), FinAbGroup::from_cyclic_orders(1, {3}));
    EXPECT_EQ(cokernel(IntMatrix(2, 0)), FinAbGroup::free(2));
}

TEST(Cokernel, AgreesWithCosetEnumeration) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        std::vector<std::vector<long>> cols(c, std::vector<long>(r));
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) {
                cols[j][i] = entry(rng);
                a(i, j) = cols[j][i];
            }
        auto g = cokernel(a);
        for (long m = 2; m <= 16; ++m)
            EXPECT_EQ(duval::oracle::quotient_order_mod(cols, r, m), duval::oracle::predicted_order_mod(g, m))
                << a.to_string() << " mod " << m;
    }
}

TEST(Groups, DirectSumAndTorsion) {
    auto g = direct_sum(FinAbGroup::free(1), FinAbGroup::from_cyclic_orders(0, {2, 3}));
    EXPECT_EQ(g.to_string(), "Z + Z/6");
    EXPECT_EQ(torsion_part(g), FinAbGroup::cyclic(6));
    EXPECT_EQ(g.torsion_order(), 6);
}

TEST(IntMatrix, RejectsBadShapes) {
    EXPECT_THROW(IntMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
}
