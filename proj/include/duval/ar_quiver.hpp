#pragma once

// Extended Dynkin diagrams, their dimension vectors and the periodic
// translation quivers that knitting runs on.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace duval {

enum class Family { A, D, E };

struct DynkinType {
    Family family = Family::A;
    int n = 1;

    DynkinType() = default;
    DynkinType(Family f, int rank) : family(f), n(rank) { validate(); }

    void validate() const {
        bool ok = (family == Family::A && n >= 1) || (family == Family::D && n >= 4) ||
                  (family == Family::E && n >= 6 && n <= 8);
        if (!ok) throw std::invalid_argument("DynkinType: rank " + std::to_string(n) + " out of range for family " + letter());
    }

    int vertex_count() const { return n + 1; }
    std::string letter() const { return family == Family::A ? "A" : family == Family::D ? "D" : "E"; }
    std::string name() const { return letter() + std::to_string(n); }

    // "A4", "D6", "E8" (case-insensitive family letter).
    static DynkinType parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("DynkinType: cannot parse '" + s + "'");
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        Family f;
        if (c == 'A') f = Family::A;
        else if (c == 'D') f = Family::D;
        else if (c == 'E') f = Family::E;
        else throw std::invalid_argument("DynkinType: unknown family in '" + s + "'");
        std::size_t pos = 0;
        int rank = 0;
        try {
            rank = std::stoi(s.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("DynkinType: cannot parse rank in '" + s + "'");
        }
        if (pos != s.size() - 1) throw std::invalid_argument("DynkinType: trailing characters in '" + s + "'");
        return DynkinType(f, rank);
    }

    friend bool operator==(const DynkinType& a, const DynkinType& b) { return a.family == b.family && a.n == b.n; }
};

// Undirected edges of the extended diagram, vertex 0 being the extended vertex.
// In type A1 the single edge is doubled.
inline std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t) {
    std::vector<std::pair<int, int>> e;
    switch (t.family) {
    case Family::A:
        if (t.n == 1) return {{0, 1}, {0, 1}};
        for (int v = 0; v <= t.n; ++v) e.push_back({v, (v + 1) % (t.n + 1)});
        return e;
    case Family::D: {
        int n = t.n;
        e = {{0, 2}, {1, 2}};
        for (int k = 2; k < n - 2; ++k) e.push_back({k, k + 1});
        e.push_back({n - 1, n - 2});
        e.push_back({n, n - 2});
        return e;
    }
    case Family::E:
        if (t.n == 6) return {{2, 3}, {3, 4}, {0, 1}, {1, 4}, {4, 5}, {5, 6}};
        if (t.n == 7) return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
        return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    }
    return e;
}

inline std::vector<std::vector<int>> adjacency(const DynkinType& t) {
    std::vector<std::vector<int>> adj(t.vertex_count());
    for (auto [a, b] : dynkin_edges(t)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

struct DimensionVector {
    std::vector<int> delta;
    int operator[](int v) const { return delta.at(v); }
};

inline DimensionVector dimension_vector(const DynkinType& t) {
    int n = t.n;
    switch (t.family) {
    case Family::A: return {std::vector<int>(n + 1, 1)};
    case Family::D: {
        std::vector<int> d(n + 1, 2);
        d[0] = d[1] = d[n - 1] = d[n] = 1;
        return {d};
    }
    case Family::E:
        if (n == 6) return {{1, 2, 1, 2, 3, 2, 1}};
        if (n == 7) return {{1, 2, 3, 4, 3, 2, 1, 2}};
        return {{1, 2, 3, 4, 5, 6, 4, 2, 3}};
    }
    return {};
}

// Which of the two alternating slice layers a vertex of a D or E quiver sits in.
inline int layer_of(const DynkinType& t, int v) {
    int n = t.n;
    if (t.family == Family::D) {
        if (v == 0 || v == 1) return 0;
        if (n % 2 == 1) {
            if (v == n - 1 || v == n) return 1;
            return v % 2 == 1 ? 0 : 1;
        }
        if (v == n - 1 || v == n) return 0;
        return v % 2 == 1 ? 0 : 1;
    }
    if (t.family == Family::E) {
        static const std::set<int> e6{0, 2, 4, 6}, e7{1, 3, 5}, e8{1, 3, 5, 7};
        const auto& s = n == 6 ? e6 : n == 7 ? e7 : e8;
        return s.count(v) ? 0 : 1;
    }
    throw std::logic_error("layer_of: type A quivers are not layered");
}

struct Cell {
    int slice = 0;
    int vertex = 0;
    friend bool operator==(const Cell& a, const Cell& b) { return a.slice == b.slice && a.vertex == b.vertex; }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.slice != b.slice ? a.slice < b.slice : a.vertex < b.vertex;
    }
};

struct Arrow {
    Cell from;
    Cell to;
};

// Cells are produced by rule on demand; `slices()` only bounds what
// cells(), arrows() and translate() report.
//
// Type A: every slice holds all vertices, with arrows v -> v-1 inside a
// slice and v -> v+1 into the next one; tau moves one slice back.
// Types D and E: slices alternate between the two layers of the bipartite
// diagram, arrows join neighbours in consecutive slices, tau moves two back.
class TranslationQuiver {
public:
    TranslationQuiver(DynkinType t, int slices) : type_(t), slices_(slices) {
        t.validate();
        if (slices < 2 * period())
            throw std::invalid_argument("TranslationQuiver: need at least " + std::to_string(2 * period()) + " slices");
        adj_ = adjacency(t);
    }

    const DynkinType& type() const { return type_; }
    int slices() const { return slices_; }
    int period() const { return type_.family == Family::A ? 1 : 2; }

    TranslationQuiver grown(int slices) const { return TranslationQuiver(type_, std::max(slices, slices_)); }

    std::vector<int> vertices_in_slice(int s) const {
        std::vector<int> out;
        for (int v = 0; v < type_.vertex_count(); ++v)
            if (in_slice(s, v)) out.push_back(v);
        return out;
    }

    bool contains(const Cell& c) const {
        return c.slice >= 0 && c.slice < slices_ && c.vertex >= 0 && c.vertex < type_.vertex_count() &&
               in_slice(c.slice, c.vertex);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int s = 0; s < slices_; ++s)
            for (int v : vertices_in_slice(s)) out.push_back({s, v});
        return out;
    }

    // Arrows ending at c whose source is also a cell of the quiver.
    std::vector<Cell> in_arrows(const Cell& c) const {
        std::vector<Cell> out;
        if (type_.family == Family::A) {
            int m = type_.vertex_count();
            Cell intra{c.slice, (c.vertex + 1) % m};
            Cell cross{c.slice - 1, (c.vertex - 1 + m) % m};
            if (contains(intra)) out.push_back(intra);
            if (contains(cross)) out.push_back(cross);
            return out;
        }
        for (int u : adj_[c.vertex]) {
            Cell p{c.slice - 1, u};
            if (contains(p)) out.push_back(p);
        }
        return out;
    }

    std::optional<Cell> translate(const Cell& c) const {
        Cell t{c.slice - period(), c.vertex};
        if (!contains(t)) return std::nullopt;
        return t;
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        for (auto& c : cells())
            for (auto& p : in_arrows(c)) out.push_back({p, c});
        return out;
    }

    // Arrows of one full period, collapsed onto Dynkin vertices. Each arrow
    // is attributed to the slice of its target.
    std::map<std::pair<int, int>, int> collapsed_period(int first_slice = -1) const {
        if (first_slice < 0) first_slice = period();
        std::map<std::pair<int, int>, int> m;
        int m_vertices = type_.vertex_count();
        for (int s = first_slice; s < first_slice + period(); ++s)
            for (int v : vertices_in_slice(s)) {
                if (type_.family == Family::A) {
                    ++m[{(v + 1) % m_vertices, v}];
                    ++m[{(v - 1 + m_vertices) % m_vertices, v}];
                } else {
                    for (int u : adj_[v]) ++m[{u, v}];
                }
            }
        return m;
    }

    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph translation_" << type_.name() << " {\n  rankdir=LR;\n";
        for (int s = 0; s < period() + 1 && s < slices_; ++s) {
            os << "  { rank=same;";
            for (int v : vertices_in_slice(s)) os << " \"" << s << ':' << v << '"';
            os << " }\n";
        }
        for (int s = 0; s < period() + 1 && s < slices_; ++s)
            for (int v : vertices_in_slice(s)) {
                os << "  \"" << s << ':' << v << "\" [label=\"" << v << "\"];\n";
                for (auto& p : in_arrows({s, v}))
                    os << "  \"" << p.slice << ':' << p.vertex << "\" -> \"" << s << ':' << v << "\";\n";
                if (auto t = translate({s, v}))
                    os << "  \"" << s << ':' << v << "\" -> \"" << t->slice << ':' << t->vertex
                       << "\" [style=dashed, constraint=false];\n";
            }
        os << "}\n";
        return os.str();
    }

private:
    bool in_slice(int s, int v) const {
        if (type_.family == Family::A) return true;
        return layer_of(type_, v) == (s % 2 + 2) % 2;
    }

    DynkinType type_;
    int slices_;
    std::vector<std::vector<int>> adj_;
};

inline TranslationQuiver build(const DynkinType& t, int slices) { return TranslationQuiver(t, slices); }

// DOT for the double quiver: one arrow each way per edge of the extended diagram.
inline std::string double_quiver_dot(const DynkinType& t) {
    std::ostringstream os;
    os << "digraph double_" << t.name() << " {\n";
    auto d = dimension_vector(t);
    for (int v = 0; v < t.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << v << " (" << d[v] << ")\"];\n";
    for (auto [a, b] : dynkin_edges(t)) {
        os << "  " << a << " -> " << b << ";\n";
        os << "  " << b << " -> " << a << ";\n";
    }
    os << "}\n";
    return os.str();
}

class VertexSubset {
public:
    VertexSubset() : members_{0} {}
    explicit VertexSubset(std::vector<int> m) : members_(std::move(m)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty() || members_.front() != 0)
            throw std::invalid_argument("VertexSubset: must contain the extended vertex 0");
    }
    VertexSubset(std::initializer_list<int> m) : VertexSubset(std::vector<int>(m)) {}

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

    void check_in(const DynkinType& t) const {
        for (int v : members_)
            if (v < 0 || v >= t.vertex_count())
                throw std::invalid_argument("VertexSubset: vertex " + std::to_string(v) + " not in " + t.name());
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
        return s + "}";
    }

    friend bool operator==(const VertexSubset& a, const VertexSubset& b) { return a.members_ == b.members_; }

private:
    std::vector<int> members_;
};

}  // namespace duval
