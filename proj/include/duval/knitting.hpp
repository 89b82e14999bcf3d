#pragma once

// Knitting on translation quivers of extended Dynkin type and the arrow
// counts of the quiver of e_I Pi e_I.

#include "ar_quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace duval {

enum class Direction { forward, backward };
enum class Mark { plain, boxed, circled };

class KnittingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One evaluated position. For D and E the pair (col,row) is (quiver slice,
// vertex). Type A is knitted on the universal cover of the cylinder, where
// col and row are grid coordinates and `slice` is the cylinder slice the
// cell lies over.
struct KnitCell {
    int step = 0;
    int col = 0;
    int row = 0;
    int slice = 0;
    int vertex = 0;
    int value = 0;
    Mark mark = Mark::plain;
};

class KnittingTableau {
public:
    KnittingTableau(DynkinType t, VertexSubset subset, int start, Direction dir)
        : type_(t), subset_(std::move(subset)), start_(start), dir_(dir), sums_(t.vertex_count(), 0) {}

    const DynkinType& type() const { return type_; }
    const VertexSubset& subset() const { return subset_; }
    TranslationQuiver quiver() const {
        return TranslationQuiver(type_, std::max(stop_step_ + 1, 2 * (type_.family == Family::A ? 1 : 2)));
    }
    int start_vertex() const { return start_; }
    Direction direction() const { return dir_; }
    const std::vector<KnitCell>& cells() const { return cells_; }
    int stop_step() const { return stop_step_; }

    // Sum of the non-negative values over the circled cells of each vertex:
    // arrows start -> i when knitting forward, i -> start when backward.
    const std::vector<int>& sums() const { return sums_; }
    int sum_at(int v) const { return sums_.at(v); }

    std::vector<KnitCell> step_cells(int k) const {
        std::vector<KnitCell> out;
        for (auto& c : cells_)
            if (c.step == k) out.push_back(c);
        return out;
    }

    std::string render_text() const {
        std::ostringstream os;
        os << "knit " << type_.name() << " I=" << subset_.to_string() << " from " << start_
           << (dir_ == Direction::forward ? " (forward)" : " (backward)") << "\n";
        auto fmt = [](const KnitCell& c) {
            std::string v = std::to_string(c.value);
            if (c.mark == Mark::boxed) return "[" + v + "]";
            if (c.mark == Mark::circled) return "(" + v + ")";
            return " " + v + " ";
        };
        if (type_.family != Family::A) {
            // rows are vertices, columns are knitting steps
            std::vector<std::vector<std::string>> grid(type_.vertex_count(),
                                                       std::vector<std::string>(stop_step_ + 1, ""));
            for (auto& c : cells_) grid[c.vertex][c.step] = fmt(c);
            os << "     ";
            for (int k = 0; k <= stop_step_; ++k) os << pad("s" + std::to_string(slice_of_step(k)), 5);
            os << "\n";
            for (int v = 0; v < type_.vertex_count(); ++v) {
                os << pad(std::to_string(v), 3) << (subset_.contains(v) ? "* " : "  ");
                for (int k = 0; k <= stop_step_; ++k) os << pad(grid[v][k], 5);
                os << "\n";
            }
        } else {
            int maxc = 0, maxr = 0;
            for (auto& c : cells_) {
                maxc = std::max(maxc, std::abs(c.col));
                maxr = std::max(maxr, std::abs(c.row));
            }
            std::map<std::pair<int, int>, const KnitCell*> at;
            for (auto& c : cells_) at[{std::abs(c.col), std::abs(c.row)}] = &c;
            for (int r = 0; r <= maxr; ++r) {
                for (int c = 0; c <= maxc; ++c) {
                    auto it = at.find({c, r});
                    if (it == at.end()) os << pad("", 8);
                    else os << pad(std::to_string(it->second->vertex) + ":" + fmt(*it->second), 8);
                }
                os << "\n";
            }
        }
        os << "sums:";
        for (int v : subset_.members()) os << " " << v << "=" << sums_[v];
        os << "\n";
        return os.str();
    }

private:
    friend KnittingTableau knit(const DynkinType&, const VertexSubset&, int, Direction);

    int slice_of_step(int k) const {
        for (auto& c : cells_)
            if (c.step == k) return c.slice;
        return k;
    }

    static std::string pad(const std::string& s, std::size_t w) {
        return s.size() >= w ? s + " " : std::string(w - s.size(), ' ') + s;
    }

    DynkinType type_;
    VertexSubset subset_;
    int start_;
    Direction dir_;
    std::vector<KnitCell> cells_;
    int stop_step_ = 0;
    std::vector<int> sums_;
};

inline int knitting_step_cap(const DynkinType& t) {
    return 4 * t.vertex_count() * (t.family == Family::A ? 1 : 2);
}

// Step 2 puts the box at j and zeros on the rest of its slice; each later
// value is the sum over in-arrows minus the value at tau, where circled cells
// (vertices of I other than the box) count as 0. A value of -1 ends the
// branch it lies on: it contributes 0 to later cells. Knitting stops once
// every branch has ended, i.e. two consecutive slices are entirely zero;
// the last nonzero slice always carries a -1.
inline KnittingTableau knit(const DynkinType& t, const VertexSubset& subset, int j, Direction dir) {
    t.validate();
    subset.check_in(t);
    if (!subset.contains(j))
        throw std::invalid_argument("knit: start vertex " + std::to_string(j) + " is not in " + subset.to_string());
    if (subset.size() < 2) throw std::invalid_argument("knit: subset needs at least two vertices");

    KnittingTableau tab(t, subset, j, dir);
    const int m = t.vertex_count();
    const int cap = knitting_step_cap(t);
    const int sign = dir == Direction::forward ? 1 : -1;
    const auto adj = adjacency(t);

    // effective contributions keyed by (col,row)
    std::unordered_map<std::int64_t, int> eff;
    auto key = [](int c, int r) { return (static_cast<std::int64_t>(c) << 32) ^ static_cast<std::uint32_t>(r); };
    auto get = [&](int c, int r) {
        auto it = eff.find(key(c, r));
        return it == eff.end() ? 0 : it->second;
    };

    struct Pos {
        int col, row, slice, vertex;
    };
    // positions of step k, their in-arrow sources and their translate
    std::function<std::vector<Pos>(int)> layer;
    std::function<std::vector<std::pair<int, int>>(const Pos&)> preds;
    std::function<std::pair<int, int>(const Pos&)> tau;

    if (t.family == Family::A) {
        // cover coordinates (c,r) = sign*(a,b) with a,b >= 0 and a+b = step
        layer = [=](int k) {
            std::vector<Pos> out;
            for (int a = 0; a <= k; ++a) {
                int c = sign * a, r = sign * (k - a);
                int v = (((c - r + j) % m) + m) % m;
                out.push_back({c, r, c, v});
            }
            return out;
        };
        preds = [=](const Pos& p) {
            return std::vector<std::pair<int, int>>{{p.col, p.row - sign}, {p.col - sign, p.row}};
        };
        tau = [=](const Pos& p) { return std::pair<int, int>{p.col - sign, p.row - sign}; };
    } else {
        int s0 = layer_of(t, j);
        if (dir == Direction::backward) s0 += 2 * ((cap + 1) / 2) + 2;
        layer = [=, &t](int k) {
            std::vector<Pos> out;
            int s = s0 + sign * k;
            for (int v = 0; v < m; ++v)
                if (layer_of(t, v) == ((s % 2) + 2) % 2) out.push_back({s, v, s, v});
            return out;
        };
        preds = [=, &adj](const Pos& p) {
            std::vector<std::pair<int, int>> out;
            for (int u : adj[p.vertex]) out.push_back({p.col - sign, u});
            return out;
        };
        tau = [=](const Pos& p) { return std::pair<int, int>{p.col - 2 * sign, p.row}; };
    }

    for (auto& p : layer(0)) {
        bool box = p.vertex == j;
        int val = box ? 1 : 0;
        eff[key(p.col, p.row)] = val;
        tab.cells_.push_back({0, p.col, p.row, p.slice, p.vertex, val,
                              box ? Mark::boxed : (subset.contains(p.vertex) ? Mark::circled : Mark::plain)});
    }

    int quiet = 0, last_nonzero = 0;
    for (int k = 1;; ++k) {
        if (k > cap)
            throw KnittingError("knit: no termination within " + std::to_string(cap) + " slices for " + t.name() + " " +
                                subset.to_string() + " from " + std::to_string(j));
        bool nonzero = false;
        for (auto& p : layer(k)) {
            int val = 0;
            for (auto [c, r] : preds(p)) val += get(c, r);
            auto [tc, tr] = tau(p);
            val -= get(tc, tr);
            if (val < -1)
                throw KnittingError("knit: value " + std::to_string(val) + " below -1 at slice " +
                                    std::to_string(p.slice) + " vertex " + std::to_string(p.vertex));
            bool circled = subset.contains(p.vertex);
            int e = (circled || val < 0) ? 0 : val;
            eff[key(p.col, p.row)] = e;
            if (circled && val > 0) tab.sums_[p.vertex] += val;
            if (val != 0) nonzero = true;
            tab.cells_.push_back({k, p.col, p.row, p.slice, p.vertex, val, circled ? Mark::circled : Mark::plain});
        }
        if (nonzero) {
            last_nonzero = k;
            quiet = 0;
        } else if (++quiet >= 2) {
            break;
        }
    }

    tab.cells_.erase(std::remove_if(tab.cells_.begin(), tab.cells_.end(),
                                    [&](const KnitCell& c) { return c.step > last_nonzero; }),
                     tab.cells_.end());
    tab.stop_step_ = last_nonzero;
    bool has_neg = false;
    for (auto& c : tab.cells_)
        if (c.step == last_nonzero && c.value == -1) has_neg = true;
    if (!has_neg) throw KnittingError("knit: final slice carries no -1");
    return tab;
}

struct GammaQuiver {
    VertexSubset subset;
    std::map<std::pair<int, int>, int> counts;  // (i,j) -> arrows i -> j

    int count(int i, int j) const {
        auto it = counts.find({i, j});
        return it == counts.end() ? 0 : it->second;
    }

    bool symmetric() const {
        for (auto& [k, v] : counts)
            if (count(k.second, k.first) != v) return false;
        return true;
    }

    std::string to_dot(const std::string& name = "gamma") const {
        std::ostringstream os;
        os << "digraph " << name << " {\n";
        for (int v : subset.members()) os << "  " << v << ";\n";
        for (auto& [k, c] : counts)
            for (int x = 0; x < c; ++x) os << "  " << k.first << " -> " << k.second << ";\n";
        os << "}\n";
        return os.str();
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "   ";
        for (int j : subset.members()) os << " " << j;
        os << "\n";
        for (int i : subset.members()) {
            os << " " << i << " ";
            for (int j : subset.members()) os << " " << count(i, j);
            os << "\n";
        }
        return os.str();
    }
};

// Violations of the symmetry theorem and of the bound at the extended vertex.
inline std::vector<std::string> gamma_violations(const DynkinType& t, const GammaQuiver& g) {
    std::vector<std::string> out;
    auto delta = dimension_vector(t);
    for (int i : g.subset.members())
        for (int j : g.subset.members())
            if (g.count(i, j) != g.count(j, i))
                out.push_back("r(" + std::to_string(i) + "," + std::to_string(j) + ") != r(" + std::to_string(j) +
                              "," + std::to_string(i) + ")");
    for (int j : g.subset.members()) {
        if (j == 0) continue;
        int r = g.count(0, j);
        bool two = g.subset.size() == 2 && delta[j] == 1;
        if (r < 0 || r > 2 || (r == 2) != two)
            out.push_back("r(0," + std::to_string(j) + ") = " + std::to_string(r));
    }
    return out;
}

inline GammaQuiver gamma_quiver(const DynkinType& t, const VertexSubset& subset) {
    if (subset.size() < 2) throw std::invalid_argument("gamma_quiver: subset needs at least two vertices");
    GammaQuiver g{subset, {}};
    for (int j : subset.members()) {
        auto tab = knit(t, subset, j, Direction::forward);
        for (int i : subset.members())
            if (tab.sum_at(i) > 0) g.counts[{j, i}] = tab.sum_at(i);
    }
    auto bad = gamma_violations(t, g);
    if (!bad.empty()) throw KnittingError("gamma_quiver: " + bad.front() + " for " + t.name() + " " + subset.to_string());
    return g;
}

// Off-diagonal arrows for type A: the double of a cycle through the members
// of I in cyclic order (two arrows each way when |I| = 2). Loops are not
// predicted.
inline GammaQuiver type_a_closed_form(int n, const VertexSubset& subset) {
    if (n < 1) throw std::invalid_argument("type_a_closed_form: n must be positive");
    subset.check_in(DynkinType(Family::A, n));
    if (subset.size() < 2) throw std::invalid_argument("type_a_closed_form: subset needs at least two vertices");
    GammaQuiver g{subset, {}};
    const auto& s = subset.members();
    std::size_t k = s.size();
    for (std::size_t a = 0; a < k; ++a) {
        int x = s[a], y = s[(a + 1) % k];
        ++g.counts[{x, y}];
        ++g.counts[{y, x}];
    }
    return g;
}

}  // namespace duval
