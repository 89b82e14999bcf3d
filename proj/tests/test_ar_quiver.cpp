#include <duval/ar_quiver.hpp>

#include <gtest/gtest.h>

using namespace duval;

namespace {

std::vector<DynkinType> all_types(int max_a = 10, int max_d = 8) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_a; ++n) out.push_back({Family::A, n});
    for (int n = 4; n <= max_d; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
    return out;
}

// Two arrows per edge of the diagram, one in each direction.
std::map<std::pair<int, int>, int> doubled(const DynkinType& t) {
    std::map<std::pair<int, int>, int> m;
    for (auto [a, b] : dynkin_edges(t)) {
        ++m[{a, b}];
        ++m[{b, a}];
    }
    return m;
}

}  // namespace

TEST(DynkinType, ParseAndValidate) {
    auto t = DynkinType::parse("D6");
    EXPECT_EQ(t.family, Family::D);
    EXPECT_EQ(t.n, 6);
    EXPECT_EQ(t.vertex_count(), 7);
    EXPECT_EQ(DynkinType::parse("A1").vertex_count(), 2);
    EXPECT_THROW(DynkinType::parse("D3"), std::invalid_argument);
    EXPECT_THROW(DynkinType::parse("E9"), std::invalid_argument);
    EXPECT_THROW(DynkinType::parse("A0"), std::invalid_argument);
    EXPECT_THROW(DynkinType::parse("X4"), std::invalid_argument);
}

TEST(DynkinType, EdgeCountsAreAffine) {
    for (auto& t : all_types()) EXPECT_EQ(static_cast<int>(dynkin_edges(t).size()), t.vertex_count() - (t.family == Family::A ? 0 : 1)) << t.name();
}

TEST(DimensionVector, Values) {
    EXPECT_EQ(dimension_vector({Family::A, 5}).delta, std::vector<int>(6, 1));
    EXPECT_EQ(dimension_vector({Family::D, 4}).delta, (std::vector<int>{1, 1, 2, 1, 1}));
    EXPECT_EQ(dimension_vector({Family::E, 8}).delta, (std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3}));
}

// delta is the null root: 2 delta_v equals the sum over neighbours.
TEST(DimensionVector, IsInKernelOfCartanMatrix) {
    for (auto& t : all_types()) {
        auto d = dimension_vector(t);
        auto adj = adjacency(t);
        EXPECT_EQ(d[0], 1);
        for (int v = 0; v < t.vertex_count(); ++v) {
            int s = 0;
            for (int u : adj[v]) s += d[u];
            EXPECT_EQ(2 * d[v], s) << t.name() << " vertex " << v;
        }
    }
}

TEST(TranslationQuiver, A2EverySliceFull) {
    auto q = build({Family::A, 2}, 6);
    for (int s = 0; s < 6; ++s) EXPECT_EQ(q.vertices_in_slice(s).size(), 3u);
    EXPECT_EQ(q.collapsed_period(), doubled({Family::A, 2}));
}

TEST(TranslationQuiver, D4AlternatesFourAndOne) {
    auto q = build({Family::D, 4}, 4);
    EXPECT_EQ(q.vertices_in_slice(0), (std::vector<int>{0, 1, 3, 4}));
    EXPECT_EQ(q.vertices_in_slice(1), (std::vector<int>{2}));
    EXPECT_EQ(q.vertices_in_slice(2).size(), 4u);
    EXPECT_EQ(q.vertices_in_slice(3).size(), 1u);
}

TEST(TranslationQuiver, CollapsedPeriodIsDoubleQuiver) {
    for (auto& t : all_types()) {
        auto q = build(t, 4 * (t.family == Family::A ? 1 : 2));
        EXPECT_EQ(q.collapsed_period(), doubled(t)) << t.name();
    }
}

TEST(TranslationQuiver, TauKeepsVertexAndIsBijectiveBetweenPeriods) {
    for (auto& t : all_types()) {
        auto q = build(t, 6);
        int p = q.period();
        for (auto& c : q.cells()) {
            auto tc = q.translate(c);
            if (c.slice >= p) {
                ASSERT_TRUE(tc.has_value()) << t.name();
                EXPECT_EQ(tc->vertex, c.vertex);
                EXPECT_EQ(tc->slice, c.slice - p);
            } else {
                EXPECT_FALSE(tc.has_value());
            }
        }
        for (int s = p; s + p <= 6; ++s) EXPECT_EQ(q.vertices_in_slice(s), q.vertices_in_slice(s - p));
    }
}

// in-degree plus out-degree of each Dynkin vertex over a period.
TEST(TranslationQuiver, DegreePerPeriod) {
    for (auto& t : all_types()) {
        auto q = build(t, 8);
        auto coll = q.collapsed_period();
        std::vector<int> deg(t.vertex_count(), 0), expect(t.vertex_count(), 0);
        for (auto& [k, c] : coll) {
            deg[k.first] += c;
            deg[k.second] += c;
        }
        for (auto [a, b] : dynkin_edges(t)) {
            expect[a] += 2;
            expect[b] += 2;
        }
        EXPECT_EQ(deg, expect) << t.name();
    }
}

TEST(TranslationQuiver, ArrowsJoinConsecutiveOrSameSlice) {
    for (auto& t : all_types()) {
        auto q = build(t, 6);
        for (auto& a : q.arrows()) {
            EXPECT_TRUE(q.contains(a.from));
            EXPECT_TRUE(a.to.slice - a.from.slice == 1 || (t.family == Family::A && a.to.slice == a.from.slice));
        }
    }
}

TEST(TranslationQuiver, RejectsTooFewSlices) {
    EXPECT_THROW(build({Family::D, 5}, 3), std::invalid_argument);
    EXPECT_NO_THROW(build({Family::A, 3}, 2));
}

TEST(TranslationQuiver, DotExport) {
    auto dot = build({Family::E, 6}, 4).to_dot();
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("style=dashed"), std::string::npos);
    auto dd = double_quiver_dot({Family::A, 2});
    EXPECT_NE(dd.find("0 -> 1"), std::string::npos);
    EXPECT_NE(dd.find("1 -> 0"), std::string::npos);
}

TEST(VertexSubset, Normalises) {
    VertexSubset s{3, 0, 1, 3};
    EXPECT_EQ(s.members(), (std::vector<int>{0, 1, 3}));
    EXPECT_EQ(s.to_string(), "{0,1,3}");
    EXPECT_THROW(VertexSubset({1, 2}), std::invalid_argument);
    EXPECT_THROW(VertexSubset({0, 7}).check_in({Family::D, 4}), std::invalid_argument);
}
