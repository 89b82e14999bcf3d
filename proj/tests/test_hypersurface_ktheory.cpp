#include <duval/hypersurface_ktheory.hpp>
#include <duval/coset_oracle.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace duval;

namespace {
FinAbGroup zt(std::size_t r, std::vector<Integer> t = {}) { return FinAbGroup::from_cyclic_orders(r, std::move(t)); }
}  // namespace

TEST(ClassGroup, Examples) {
    EXPECT_EQ(class_group(ViehwegData({3})), zt(0, {3}));
    EXPECT_TRUE(class_group(ViehwegData({1})).is_trivial());
    EXPECT_EQ(class_group(ViehwegData({2, 1})), zt(1));
    EXPECT_EQ(class_group(ViehwegData({3, 3})), zt(1, {3}));
    EXPECT_EQ(class_group(ViehwegData({2, 4, 6})), zt(2, {2}));
}

TEST(ClassGroup, IndependentOfAmbientDimensionAndOrder) {
    EXPECT_EQ(class_group(ViehwegData({2, 3, 4}, 1)), class_group(ViehwegData({4, 2, 3}, 5)));
}

TEST(Surface, Examples) {
    EXPECT_EQ(g0_surface(ViehwegData({4}, 1)), zt(1, {4}));
    EXPECT_EQ(g0_surface(ViehwegData({1, 1}, 1)), zt(2));
    EXPECT_EQ(g0_surface(ViehwegData({2}, 1)), zt(1, {2}));
    EXPECT_THROW(g0_surface(ViehwegData({2}, 2)), std::invalid_argument);
}

TEST(StableCM, Examples) {
    EXPECT_EQ(k0_stable_cm(ViehwegData({2})), zt(0, {2}));
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(k0_stable_cm(ViehwegData({n + 1}, 3)), zt(0, {n + 1}));
    EXPECT_TRUE(k0_stable_cm(ViehwegData({1})).is_trivial());
}

TEST(CdvTypeA, Examples) {
    EXPECT_EQ(g0_cdv_type_a(ViehwegData({2, 1}, 2)), zt(2));
    EXPECT_EQ(g0_cdv_type_a(ViehwegData({1}, 2)), zt(1));
    EXPECT_EQ(g0_cdv_type_a(ViehwegData({3, 3}, 2)), zt(2, {3}));
}

TEST(Viehweg, RejectsBadData) {
    EXPECT_THROW(ViehwegData(std::vector<long>{}), std::invalid_argument);
    EXPECT_THROW(ViehwegData({2, 0}), std::invalid_argument);
    EXPECT_THROW(ViehwegData({2}, -1), std::invalid_argument);
}

// Exhaustive over t <= 3 and exponents <= 4 against coset enumeration.
TEST(Viehweg, FormulasAgreeWithCosetOracle) {
    for (int t = 1; t <= 3; ++t) {
        std::vector<long> a(t, 1);
        for (;;) {
            ViehwegData d(a, 2);
            auto cl = class_group(d);
            std::vector<std::vector<long>> col{a};
            for (long m = 2; m <= 12; ++m)
                EXPECT_EQ(duval::oracle::quotient_order_mod(col, t, m), duval::oracle::predicted_order_mod(cl, m));
            EXPECT_EQ(k0_stable_cm(d), cl);
            EXPECT_EQ(g0_cdv_type_a(d), direct_sum(FinAbGroup::free(1), cl));
            EXPECT_EQ(g0_surface(ViehwegData(a, 1)), direct_sum(FinAbGroup::free(1), cl));
            long g = 0;
            for (long x : a) g = std::gcd(g, x);
            EXPECT_EQ(cl, g == 1 ? FinAbGroup::free(t - 1) : zt(t - 1, {g}));
            int k = 0;
            while (k < t && a[k] == 4) a[k++] = 1;
            if (k == t) break;
            ++a[k];
        }
    }
}

TEST(Suspension, PinchCounterexample) {
    auto r = suspension_report(ViehwegData({2}), ViehwegData({1}, 3));
    EXPECT_EQ(r.g0, zt(1, {2}));
    EXPECT_TRUE(r.cl.is_trivial());
    EXPECT_FALSE(r.g0_equals_z_plus_cl);
}

TEST(Suspension, HoldsWhenFactorisationKept) {
    auto a = suspension_report(ViehwegData({1}), ViehwegData({1}, 3));
    EXPECT_EQ(a.g0, zt(1));
    EXPECT_TRUE(a.g0_equals_z_plus_cl);
    auto b = suspension_report(ViehwegData({3}), ViehwegData({3}, 3));
    EXPECT_EQ(b.g0, zt(1, {3}));
    EXPECT_TRUE(b.g0_equals_z_plus_cl);
}

TEST(Cdv, Reports) {
    auto r0 = cdv_report(0);
    EXPECT_EQ(r0.g0, zt(1));
    EXPECT_TRUE(r0.cl.is_trivial());
    auto r3 = cdv_report(3);
    EXPECT_EQ(r3.g0, zt(4));
    EXPECT_EQ(r3.cl, zt(3));
    EXPECT_TRUE(r3.k0_sg.is_trivial());
    for (int t = 0; t <= 20; ++t) {
        auto r = cdv_report(t);
        EXPECT_EQ(r.g0, direct_sum(FinAbGroup::free(1), r.cl));
        EXPECT_TRUE(r.g0_equals_z_plus_cl);
    }
    EXPECT_THROW(cdv_report(-1), std::invalid_argument);
}

TEST(Viehweg, ReportRecordsSetting) {
    auto g = viehweg_report(ViehwegData({4}, 1), Setting::global);
    EXPECT_TRUE(g.g0_from_surface_theorem);
    EXPECT_EQ(g.g0, zt(1, {4}));
    auto l = viehweg_report(ViehwegData({2, 2}, 2), Setting::complete_local);
    EXPECT_FALSE(l.g0_from_surface_theorem);
    EXPECT_EQ(l.g0, zt(2, {2}));
}
