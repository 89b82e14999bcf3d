#include <duval/cyclotomic.hpp>

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace duval;

namespace {

std::vector<Integer> poly(std::initializer_list<long> c) { return std::vector<Integer>(c.begin(), c.end()); }

// Numeric value, used as an independent oracle for the exact arithmetic.
std::complex<double> approx(const Cyclotomic& x) { return x.numeric(); }

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Cyclotomic random_element(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 3), exp(0, m - 1), terms(0, 4);
    Cyclotomic x(Rational(0), m);
    for (int t = terms(rng); t > 0; --t) x += Cyclotomic::zeta(m, exp(rng)).scaled(frac(coef(rng), den(rng)));
    return x;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallConductors) {
    EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(15), poly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(CyclotomicPolynomial, DegreeIsPhi) {
    const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
    for (int m = 1; m <= 20; ++m) {
        EXPECT_EQ(euler_phi(m), phi[m]);
        EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(m).size()) - 1, phi[m]);
    }
    EXPECT_EQ(euler_phi(360), 96);
}

TEST(Cyclotomic, RootsOfUnity) {
    for (int m : {1, 2, 3, 4, 5, 6, 8, 12, 15, 24}) {
        auto z = Cyclotomic::zeta(m);
        Cyclotomic p(1);
        for (int k = 0; k < m; ++k) p = p * z;
        EXPECT_EQ(p, Cyclotomic(1)) << m;
        Cyclotomic s(Rational(0), m);
        for (int k = 0; k < m; ++k) s += Cyclotomic::zeta(m, k);
        EXPECT_EQ(s, Cyclotomic(m == 1 ? 1 : 0)) << m;
        EXPECT_EQ(z * z.conj(), Cyclotomic(1));
        EXPECT_EQ(Cyclotomic::zeta(m, -1), z.conj());
    }
    EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(4), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::zeta(2), Cyclotomic(-1));
}

TEST(Cyclotomic, MixedConductors) {
    // zeta_3 = zeta_6^2, zeta_4 zeta_3 = zeta_12^7
    EXPECT_EQ(Cyclotomic::zeta(3), Cyclotomic::zeta(6, 2));
    auto p = Cyclotomic::zeta(4) * Cyclotomic::zeta(3);
    EXPECT_EQ(p.conductor(), 12);
    EXPECT_EQ(p, Cyclotomic::zeta(12, 7));
    EXPECT_EQ(Cyclotomic::zeta(3).in_field(12).conductor(), 12);
    EXPECT_THROW(Cyclotomic::zeta(3).in_field(10), std::invalid_argument);
}

TEST(Cyclotomic, SquareRootOfFive) {
    auto z = [](int k) { return Cyclotomic::zeta(5, k); };
    Cyclotomic r = Cyclotomic(1) + z(1).scaled(2) + z(4).scaled(2);
    EXPECT_EQ(r * r, Cyclotomic(5));
    EXPECT_TRUE((r * r).is_rational());
    EXPECT_FALSE(r.is_rational());
    EXPECT_EQ(r.conj(), r);
}

TEST(Cyclotomic, RationalQueries) {
    Cyclotomic h(frac(3, 4), 8);
    EXPECT_TRUE(h.is_rational());
    EXPECT_EQ(h.rational(), frac(3, 4));
    EXPECT_THROW(h.to_integer(), std::domain_error);
    EXPECT_EQ(Cyclotomic(-7).to_integer(), -7);
    EXPECT_TRUE(Cyclotomic(Rational(0), 9).is_zero());
}

TEST(Cyclotomic, ToString) {
    EXPECT_EQ(Cyclotomic(Rational(0), 5).to_string(), "0");
    EXPECT_EQ(Cyclotomic::zeta(12, 3).to_string(), "z12^3");
    EXPECT_EQ((Cyclotomic::zeta(4) - Cyclotomic(2)).to_string(), "-2 + z4");
}

TEST(Cyclotomic, FieldAxiomsAgainstNumericValues) {
    std::mt19937 rng(5);
    for (int m : {3, 5, 7, 8, 9, 12, 20}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_element(rng, m), b = random_element(rng, m), c = random_element(rng, m);
            EXPECT_TRUE(close(approx(a * b), approx(a) * approx(b)));
            EXPECT_TRUE(close(approx(a + b), approx(a) + approx(b)));
            EXPECT_TRUE(close(approx(a.conj()), std::conj(approx(a))));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a - a, Cyclotomic(Rational(0), m));
        }
    }
}

TEST(CycMatrix, DeterminantAndProduct) {
    auto p = CycMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 1);
    EXPECT_EQ(p.determinant(), Cyclotomic(1));
    auto s = CycMatrix::from_rows({{0, 1}, {1, 0}}, 1);
    EXPECT_EQ(s.determinant(), Cyclotomic(-1));
    EXPECT_EQ(p * p * p, CycMatrix::identity(3, 1));
    auto d = CycMatrix::diagonal({Cyclotomic::zeta(6), Cyclotomic::zeta(6, 5)}, 6);
    EXPECT_EQ(d.determinant(), Cyclotomic(1));
    EXPECT_EQ(d.trace(), Cyclotomic(1));  // zeta_6 + zeta_6^-1 = 1
    auto two = CycMatrix::identity(2, 6).scaled(Cyclotomic(2));
    EXPECT_EQ(two.determinant(), Cyclotomic(4));
    EXPECT_THROW(CycMatrix::from_rows({{1, 2}, {3}}, 1), std::invalid_argument);
}

TEST(CycMatrix, DeterminantMatchesNumeric) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        CycMatrix a(3, 8);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = random_element(rng, 8);
        std::complex<double> m[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = approx(a(i, j));
        auto det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        EXPECT_TRUE(close(approx(a.determinant()), det));
        EXPECT_EQ(a.transpose().determinant(), a.determinant());
    }
}
