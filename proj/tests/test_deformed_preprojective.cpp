#include <duval/deformed_preprojective.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace duval;

namespace {
WeightVector wv(std::vector<long> l) {
    std::vector<Rational> q(l.begin(), l.end());
    return WeightVector(q);
}
FinAbGroup zt(std::size_t r, std::vector<Integer> t = {}) { return FinAbGroup::from_cyclic_orders(r, std::move(t)); }
}  // namespace

TEST(Weights, Validation) {
    EXPECT_THROW(wv({1, 1}), std::invalid_argument);
    EXPECT_THROW(wv({0}), std::invalid_argument);
    auto w = WeightVector::parse("-1/2,1/4,1/4");
    EXPECT_EQ(w.n, 2);
    EXPECT_EQ(w.lambda[1], Rational(1, 4));
    EXPECT_THROW(WeightVector::parse("1,x,-1"), std::invalid_argument);
}

TEST(Centre, Examples) {
    auto a = centre_presentation(wv({0, 0, 0}));
    EXPECT_EQ(a.roots, (std::vector<Rational>{0, 0, 0}));
    EXPECT_EQ(a.exponents, (std::vector<long>{3}));
    auto b = centre_presentation(wv({-3, 1, 2}));
    EXPECT_EQ(b.roots, (std::vector<Rational>{0, 1, 3}));
    EXPECT_EQ(b.exponents, (std::vector<long>{1, 1, 1}));
    auto c = centre_presentation(wv({-1, 1, -1, 1}));
    EXPECT_EQ(c.roots, (std::vector<Rational>{0, 1, 0, 1}));
    EXPECT_EQ(c.exponents, (std::vector<long>{2, 2}));
    EXPECT_EQ(c.blocks, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(Centre, ZeroWeightsGiveKleinianEquation) {
    for (int n = 1; n <= 10; ++n) {
        auto c = centre_presentation(WeightVector(std::vector<Rational>(n + 1, 0)));
        EXPECT_EQ(c.exponents, std::vector<long>{n + 1});
    }
}

TEST(ClCentre, Examples) {
    EXPECT_EQ(cl_centre(wv({0, 0, 0})), zt(0, {3}));
    EXPECT_EQ(cl_centre(wv({-3, 1, 2})), zt(2));
    EXPECT_EQ(cl_centre(wv({-1, 1, -1, 1})), zt(1, {2}));
}

TEST(Cbh, Examples) {
    EXPECT_EQ(g0_cbh(wv({0, 0, 0})), zt(1, {3}));
    EXPECT_EQ(g0_cbh(wv({-3, 1, 2})), zt(3));
    EXPECT_EQ(g0_cbh(wv({-2, 1, 0, 1})), zt(3));
    EXPECT_THROW(g0_cbh(wv({1, -1, 0})), std::invalid_argument);
}

TEST(Cbh, RandomAdmissibleWeightsMatchCentre) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nd(1, 8), num(0, 6), den(1, 5), coin(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        int n = nd(rng);
        std::vector<Rational> l(n + 1);
        Rational s = 0;
        for (int i = 1; i <= n; ++i) {
            l[i] = coin(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
            l[i].canonicalize();
            s += l[i];
        }
        l[0] = -s;
        WeightVector w(l);
        auto g = g0_cbh(w);
        EXPECT_EQ(g, direct_sum(FinAbGroup::free(1), cl_centre(w)));
        EXPECT_EQ(g.free_rank(), static_cast<std::size_t>(n + 1) - zero_weight_vertices(w).size());
    }
}

TEST(Poly, Arithmetic) {
    auto l1 = Poly::var(2, 1), l2 = Poly::var(2, 2);
    auto p = (l1 + l2) * (l1 - l2);
    EXPECT_EQ(p, l1 * l1 - l2 * l2);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(Poly::constant(2, 0).to_string(), "0");
    EXPECT_EQ((l1 * l1 - Poly::constant(2, 2) * l2).to_string(), "l1^2 - 2*l2");
}

TEST(Rewrite, BaseCase) {
    int n = 1;
    auto nf = as_polynomial_in_x(rewrite_normal_form(PathExpression::word(n, parse_word("c0 c1 d1 d0"))));
    ASSERT_EQ(nf.size(), 2u);
    EXPECT_EQ(nf.at(2), Poly::constant(n, 1));
    EXPECT_EQ(nf.at(1), -Poly::var(n, 1));
}

TEST(Rewrite, TrivialPath) {
    auto p = PathExpression::word(2, parse_word("e0"));
    EXPECT_EQ(rewrite_normal_form(p), p);
}

TEST(Rewrite, TwoPasses) {
    int n = 2;
    auto nf = as_polynomial_in_x(rewrite_normal_form(PathExpression::word(n, parse_word("c0 c1 c2 d2 d1 d0"))));
    auto l1 = Poly::var(n, 1), l2 = Poly::var(n, 2);
    // x (x - l1)(x - l1 - l2)
    EXPECT_EQ(nf.at(3), Poly::constant(n, 1));
    EXPECT_EQ(nf.at(2), -(l1 + l1 + l2));
    EXPECT_EQ(nf.at(1), l1 * (l1 + l2));
    EXPECT_EQ(nf.count(0), 0u);
}

TEST(Rewrite, RejectsBadWords) {
    EXPECT_THROW(PathExpression::word(2, parse_word("c0 d1")), PathError);
    EXPECT_THROW(PathExpression::word(2, parse_word("c0 c1 c2")), PathError);
    EXPECT_THROW(PathExpression::word(2, parse_word("d2 c2")), PathError);
    EXPECT_THROW(PathExpression::word(2, parse_word("c1 d1")), PathError);
    EXPECT_THROW(parse_word("c0 q1"), std::invalid_argument);
}

TEST(Lemma, AllSmallCasesBothStrategies) {
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) {
            EXPECT_TRUE(verify_lemma_a2(n, j, RewriteStrategy::leftmost)) << n << "," << j;
            EXPECT_TRUE(verify_lemma_a2(n, j, RewriteStrategy::rightmost)) << n << "," << j;
            auto w = PathExpression::word(n, lemma_word(j));
            EXPECT_EQ(rewrite_normal_form(w, RewriteStrategy::leftmost),
                      rewrite_normal_form(w, RewriteStrategy::rightmost));
        }
    EXPECT_THROW(verify_lemma_a2(3, 4), std::invalid_argument);
}

// Dropping any factor of the product breaks the identity.
TEST(Lemma, TargetIsSharp) {
    int n = 3, j = 3;
    auto lhs = as_polynomial_in_x(rewrite_normal_form(PathExpression::word(n, lemma_word(j))));
    EXPECT_NE(lhs, lemma_target(n, j - 1));
}

TEST(Report, Consistency) {
    auto r = preproj_report(wv({-2, 1, 0, 1}));
    EXPECT_TRUE(r.admissible);
    EXPECT_TRUE(r.consistent);
    auto m = preproj_report(wv({-1, 1, -1, 1}));
    EXPECT_FALSE(m.admissible);
    EXPECT_EQ(m.g0_centre, zt(2, {2}));
}
