#pragma once

// Reference data replayed by `duval verify` and by the test suites.

#include "abelian_lattice.hpp"
#include "ar_quiver.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace duval::fixtures {

// One row of an arrow-count table for r(0,j). Entries are listed per vertex:
// a digit means the vertex is in I with that count, 'R' means absent, 'G'
// means optional (the row holds for every choice of the optional vertices,
// with count 0 at any that are taken).
struct KnitRow {
    const char* type;
    const char* entries;
};

inline const std::vector<KnitRow>& knitting_rows() {
    static const std::vector<KnitRow> rows = {
        {"D4", "1 2 R R R"},
        {"D4", "0 G 1 G G"},
        {"D4", "0 1 R 1 R"},
        {"D4", "0 1 R 1 1"},

        {"D5", "1 2 R R R R"},
        {"D5", "0 G 1 G G G"},
        {"D5", "0 R R 1 G G"},
        {"D5", "1 R R R 2 R"},
        {"D5", "1 R R R R 2"},
        {"D5", "0 1 R 1 G G"},
        {"D5", "0 1 R R 1 R"},
        {"D5", "0 1 R R R 1"},
        {"D5", "1 R R R 1 1"},
        {"D5", "0 1 R R 1 1"},

        {"D6", "1 2 R R R R R"},
        {"D6", "0 G 1 G G G G"},
        {"D6", "0 R R 1 G G G"},
        {"D6", "1 R R R 1 G G"},
        {"D6", "1 R R R R 2 R"},
        {"D6", "0 1 R 1 G G G"},
        {"D6", "0 1 R R 1 G G"},
        {"D6", "0 1 R R R 1 R"},
        {"D6", "1 R R R R 1 1"},
        {"D6", "0 1 R R R 1 1"},

        {"E6", "0 1 G G G G G"},
        {"E6", "1 R 2 R R R R"},
        {"E6", "0 R G 1 R R R"},
        {"E6", "0 R G G 1 G G"},
        {"E6", "0 R R R R 1 G"},
        {"E6", "1 R R R R R 2"},
        {"E6", "0 R 1 R R 1 G"},
        {"E6", "1 R 1 R R R 1"},
        {"E6", "0 R G 1 R 1 G"},
        {"E6", "0 R G 1 R R 1"},

        {"E7", "0 1 G G G G G G"},
        {"E7", "0 R 1 G G G G G"},
        {"E7", "0 R R 1 G G G G"},
        {"E7", "0 R R R 1 G G R"},
        {"E7", "1 R R R R 1 G R"},
        {"E7", "1 R R R R R 2 R"},
        {"E7", "0 R R R R R R 1"},
        {"E7", "0 R R R 1 G G 1"},
        {"E7", "0 R R R R 1 G 1"},
        {"E7", "0 R R R R R 1 1"},

        {"E8", "0 1 G G G G G G G"},
        {"E8", "0 R 1 G G G G G G"},
        {"E8", "0 R R 1 G G G G G"},
        {"E8", "0 R R R 1 G G G G"},
        {"E8", "0 R R R R 1 G G G"},
        {"E8", "0 R R R R R 1 G R"},
        {"E8", "1 R R R R R R 1 R"},
        {"E8", "0 R R R R R R R 1"},
        {"E8", "0 R R R R R 1 G 1"},
        {"E8", "0 R R R R R R 1 1"},
    };
    return rows;
}

struct ExpandedRow {
    std::vector<int> subset;
    std::vector<int> expected;  // r(0,v) for every vertex v, 0 when v is not in I
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Every concrete subset a row stands for.
inline std::vector<ExpandedRow> expand(const KnitRow& row) {
    auto ent = split_ws(row.entries);
    std::vector<int> base, optional;
    std::vector<int> expected(ent.size(), 0);
    for (std::size_t v = 0; v < ent.size(); ++v) {
        if (ent[v] == "R") continue;
        if (ent[v] == "G") {
            optional.push_back(static_cast<int>(v));
            continue;
        }
        base.push_back(static_cast<int>(v));
        expected[v] = std::stoi(ent[v]);
    }
    std::vector<ExpandedRow> out;
    for (unsigned mask = 0; mask < (1u << optional.size()); ++mask) {
        ExpandedRow e{base, expected};
        for (std::size_t b = 0; b < optional.size(); ++b)
            if (mask & (1u << b)) e.subset.push_back(optional[b]);
        std::sort(e.subset.begin(), e.subset.end());
        out.push_back(e);
    }
    return out;
}

struct GroupRow {
    std::string builtin;
    int n;  // parameter, 0 when unused
    bool symplectic;
    FinAbGroup g0;
    FinAbGroup cl;
};

inline FinAbGroup z_plus(std::vector<long> torsion) {
    std::vector<Integer> t(torsion.begin(), torsion.end());
    return FinAbGroup::from_cyclic_orders(1, t);
}
inline FinAbGroup finite(std::vector<long> torsion) {
    std::vector<Integer> t(torsion.begin(), torsion.end());
    return FinAbGroup::from_cyclic_orders(0, t);
}

// Quotients of C^3 by finite subgroups of SL(3), in the linear action.
inline std::vector<GroupRow> sl3_rows() {
    std::vector<GroupRow> rows;
    for (int n = 2; n <= 12; ++n) rows.push_back({"cyclic_sl3", n, false, z_plus({n}), finite({n})});
    for (int n = 3; n <= 12; ++n) {
        if (n % 2 == 0) rows.push_back({"dihedral_sl3", n, false, z_plus({2, 2}), finite({2, 2})});
        else rows.push_back({"dihedral_sl3", n, false, z_plus({2}), finite({2})});
    }
    rows.push_back({"trihedral", 0, false, z_plus({3}), finite({3})});
    rows.push_back({"octahedral", 0, false, z_plus({2}), finite({2})});
    rows.push_back({"icosahedral", 0, false, z_plus({}), finite({})});
    return rows;
}

// Symmetric groups acting on h + h*; rows up to `max_n` (at most 10).
inline std::vector<GroupRow> symmetric_rows(int max_n = 5) {
    static const std::vector<std::vector<long>> torsion = {
        {2}, {6}, {2, 12}, {2, 60}, {2, 6, 60}, {2, 6, 420}, {2, 2, 12, 840}, {2, 6, 12, 2520}, {2, 2, 6, 60, 2520}};
    std::vector<GroupRow> rows;
    for (int n = 2; n <= max_n && n <= 10; ++n)
        rows.push_back({"symmetric_reflection", n, true, z_plus(torsion[n - 2]), finite({2})});
    return rows;
}

// Exceptional complex reflection groups on h + h*, keyed by their
// Shephard-Todd number.
struct ReflectionRow {
    int number;
    FinAbGroup g0;
    FinAbGroup cl;
};

inline const std::vector<ReflectionRow>& reflection_rows() {
    static const std::vector<ReflectionRow> rows = {
        {4, z_plus({24}), finite({3})},
        {5, z_plus({3, 3, 24}), finite({3, 3})},
        {6, z_plus({2, 24}), finite({6})},
        {7, z_plus({3, 6, 24}), finite({3, 6})},
        {8, z_plus({4, 24}), finite({4})},
        {9, z_plus({2, 4, 48}), finite({2, 4})},
        {10, z_plus({12, 24}), finite({12})},
        {11, z_plus({2, 12, 48}), finite({2, 12})},
        {12, z_plus({2, 24}), finite({2})},
        {13, z_plus({2, 2, 48}), finite({2, 2})},
        {14, z_plus({6, 24}), finite({6})},
        {15, z_plus({2, 6, 48}), finite({2, 6})},
        {16, z_plus({5, 120}), finite({5})},
        {17, z_plus({10, 120}), finite({10})},
        {18, z_plus({15, 120}), finite({15})},
        {20, z_plus({3, 120}), finite({3})},
        {21, z_plus({6, 120}), finite({6})},
        {22, z_plus({2, 120}), finite({2})},
        {23, z_plus({2, 2, 30}), finite({2})},
        {24, z_plus({2, 2, 84}), finite({2})},
        {25, z_plus({3, 3, 72}), finite({3})},
        {26, z_plus({6, 6, 72}), finite({6})},
        {27, z_plus({6, 6, 180}), finite({2})},
        {28, z_plus({2, 2, 2, 2, 6, 12, 24}), finite({2, 2})},
        {29, z_plus({2, 2, 2, 2, 4, 16, 240}), finite({2})},
        {30, z_plus({2, 2, 60, 240}), finite({2})},
        {33, z_plus({2, 2, 2, 36, 360}), finite({2})},
        {35, z_plus({2, 6, 12, 360}), finite({2})},
    };
    return rows;
}

inline const ReflectionRow* reflection_row(int number) {
    for (auto& r : reflection_rows())
        if (r.number == number) return &r;
    return nullptr;
}

}  // namespace duval::fixtures
