#include <duval/fixtures.hpp>
#include <duval/knitting.hpp>

#include <gtest/gtest.h>

using namespace duval;

namespace {

std::vector<VertexSubset> subsets_with_zero(int vertices) {
    std::vector<VertexSubset> out;
    for (unsigned mask = 0; mask < (1u << (vertices - 1)); ++mask) {
        std::vector<int> m{0};
        for (int v = 1; v < vertices; ++v)
            if (mask & (1u << (v - 1))) m.push_back(v);
        if (m.size() >= 2) out.emplace_back(m);
    }
    return out;
}

}  // namespace

TEST(Knit, D6ForwardExample) {
    DynkinType t{Family::D, 6};
    auto tab = knit(t, {0, 1, 3}, 0, Direction::forward);
    EXPECT_EQ(tab.sum_at(0), 0);
    EXPECT_EQ(tab.sum_at(1), 1);
    EXPECT_EQ(tab.sum_at(3), 1);
}

TEST(Knit, D6BackwardExample) {
    DynkinType t{Family::D, 6};
    auto tab = knit(t, {0, 1, 3}, 0, Direction::backward);
    EXPECT_EQ(tab.sum_at(1), 1);
    EXPECT_EQ(tab.sum_at(3), 1);
    EXPECT_EQ(tab.sum_at(0), 0);
}

TEST(Knit, D4PairWithLoop) {
    auto tab = knit({Family::D, 4}, {0, 1}, 0, Direction::forward);
    EXPECT_EQ(tab.sum_at(0), 1);
    EXPECT_EQ(tab.sum_at(1), 2);
}

TEST(Knit, TableauInvariants) {
    DynkinType t{Family::E, 7};
    VertexSubset s{0, 3, 7};
    for (auto dir : {Direction::forward, Direction::backward})
        for (int j : s.members()) {
            auto tab = knit(t, s, j, dir);
            int boxes = 0;
            bool last_has_minus_one = false;
            for (auto& c : tab.cells()) {
                if (c.mark == Mark::boxed) {
                    ++boxes;
                    EXPECT_EQ(c.value, 1);
                    EXPECT_EQ(c.vertex, j);
                    EXPECT_EQ(c.step, 0);
                } else {
                    EXPECT_EQ(c.mark == Mark::circled, s.contains(c.vertex));
                }
                EXPECT_GE(c.value, -1);
                if (c.step == tab.stop_step() && c.value == -1) last_has_minus_one = true;
            }
            EXPECT_EQ(boxes, 1);
            EXPECT_TRUE(last_has_minus_one);
            EXPECT_LE(tab.stop_step(), knitting_step_cap(t));
        }
}

// Recompute every non-initial value from the mesh rule on the stored cells.
TEST(Knit, MeshRuleHoldsOnStoredCells) {
    DynkinType t{Family::D, 7};
    VertexSubset s{0, 2, 5};
    auto tab = knit(t, s, 0, Direction::forward);
    auto adj = adjacency(t);
    std::map<std::pair<int, int>, int> eff;
    for (auto& c : tab.cells())
        eff[{c.slice, c.vertex}] = (c.mark == Mark::circled || c.value < 0) ? 0 : c.value;
    for (auto& c : tab.cells()) {
        if (c.step == 0) continue;
        int v = 0;
        for (int u : adj[c.vertex]) {
            auto it = eff.find({c.slice - 1, u});
            if (it != eff.end()) v += it->second;
        }
        auto it = eff.find({c.slice - 2, c.vertex});
        if (it != eff.end()) v -= it->second;
        EXPECT_EQ(v, c.value) << "slice " << c.slice << " vertex " << c.vertex;
    }
}

TEST(Knit, Preconditions) {
    DynkinType t{Family::D, 5};
    EXPECT_THROW(knit(t, {0, 2}, 3, Direction::forward), std::invalid_argument);
    EXPECT_THROW(knit(t, VertexSubset{0}, 0, Direction::forward), std::invalid_argument);
    EXPECT_THROW(knit(t, {0, 9}, 0, Direction::forward), std::invalid_argument);
}

TEST(Knit, RenderShowsBoxAndSums) {
    auto tab = knit({Family::D, 6}, {0, 1, 3}, 0, Direction::forward);
    auto txt = tab.render_text();
    EXPECT_NE(txt.find("[1]"), std::string::npos);
    EXPECT_NE(txt.find("sums: 0=0 1=1 3=1"), std::string::npos);
    auto a = knit({Family::A, 4}, {0, 2}, 0, Direction::forward).render_text();
    EXPECT_NE(a.find("0:[1]"), std::string::npos);
}

TEST(Gamma, E6PairAndD5Triple) {
    auto g = gamma_quiver({Family::E, 6}, {0, 2});
    EXPECT_EQ(g.count(0, 0), 1);
    EXPECT_EQ(g.count(0, 2), 2);
    EXPECT_TRUE(g.symmetric());
    auto h = gamma_quiver({Family::D, 5}, {0, 4, 5});
    EXPECT_EQ(h.count(0, 0), 1);
    EXPECT_EQ(h.count(0, 4), 1);
    EXPECT_EQ(h.count(0, 5), 1);
}

TEST(Gamma, TableRows) {
    int rows = 0;
    for (auto& row : fixtures::knitting_rows()) {
        auto t = DynkinType::parse(row.type);
        for (auto& e : fixtures::expand(row)) {
            auto g = gamma_quiver(t, VertexSubset(e.subset));
            for (int v : e.subset) EXPECT_EQ(g.count(0, v), e.expected[v]) << row.type << " " << row.entries << " v=" << v;
        }
        ++rows;
    }
    EXPECT_EQ(rows, 54);
}

TEST(Gamma, ForwardBackwardAgree) {
    for (auto t : {DynkinType{Family::D, 5}, DynkinType{Family::E, 6}, DynkinType{Family::A, 4}})
        for (auto& s : subsets_with_zero(t.vertex_count()))
            for (int j : s.members()) {
                auto f = knit(t, s, j, Direction::forward);
                for (int i : s.members()) {
                    auto b = knit(t, s, i, Direction::backward);
                    EXPECT_EQ(f.sum_at(i), b.sum_at(j)) << t.name() << " " << s.to_string() << " " << j << "->" << i;
                }
            }
}

TEST(Gamma, SymmetryAndBoundSmallTypes) {
    for (auto t : {DynkinType{Family::A, 3}, DynkinType{Family::D, 4}, DynkinType{Family::D, 5}, DynkinType{Family::E, 6}})
        for (auto& s : subsets_with_zero(t.vertex_count())) {
            auto g = gamma_quiver(t, s);
            EXPECT_TRUE(gamma_violations(t, g).empty()) << t.name() << " " << s.to_string();
        }
}

TEST(Gamma, FullTypeASubsetIsTheCycle) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> all(n + 1);
        for (int v = 0; v <= n; ++v) all[v] = v;
        auto g = gamma_quiver({Family::A, n}, VertexSubset(all));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                int d = (j - i + n + 1) % (n + 1);
                EXPECT_EQ(g.count(i, j), (d == 1 || d == n) ? 1 : 0) << "A" << n << " " << i << "," << j;
            }
    }
}

TEST(TypeAClosedForm, Examples) {
    auto g = type_a_closed_form(5, {0, 2, 4});
    EXPECT_EQ(g.count(0, 2), 1);
    EXPECT_EQ(g.count(0, 4), 1);
    EXPECT_EQ(g.count(2, 4), 1);
    EXPECT_EQ(g.count(0, 0), 0);
    EXPECT_EQ(type_a_closed_form(4, {0, 1}).count(0, 1), 2);
    auto h = type_a_closed_form(9, {0, 3, 6});
    for (auto [i, j] : {std::pair{0, 3}, {3, 6}, {6, 0}}) {
        EXPECT_EQ(h.count(i, j), 1);
        EXPECT_EQ(h.count(j, i), 1);
    }
}

TEST(TypeAClosedForm, MatchesKnittingUpToA7) {
    for (int n = 1; n <= 7; ++n)
        for (auto& s : subsets_with_zero(n + 1)) {
            auto g = gamma_quiver({Family::A, n}, s);
            auto c = type_a_closed_form(n, s);
            for (int i : s.members())
                for (int j : s.members())
                    if (i != j) {
                        EXPECT_EQ(g.count(i, j), c.count(i, j)) << "A" << n << " " << s.to_string();
                    }
        }
}

TEST(Gamma, DotHasParallelEdgesAndLoops) {
    auto g = gamma_quiver({Family::D, 4}, {0, 1});
    auto dot = g.to_dot();
    EXPECT_NE(dot.find("0 -> 0;"), std::string::npos);
    auto first = dot.find("0 -> 1;");
    ASSERT_NE(first, std::string::npos);
    EXPECT_NE(dot.find("0 -> 1;", first + 1), std::string::npos);
}
