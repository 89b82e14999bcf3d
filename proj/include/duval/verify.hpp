#pragma once

// Fixture replay and property checks. Each check returns a CheckResult
// so that the command line and the acceptance runner report the same way.

#include "ar_quiver.hpp"
#include "character_table.hpp"
#include "coset_oracle.hpp"
#include "deformed_preprojective.hpp"
#include "fixtures.hpp"
#include "hypersurface_ktheory.hpp"
#include "invariant_rings.hpp"
#include "knitting.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace duval::verify {

struct CheckResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no limit

    bool within_time() const { return limit_seconds <= 0 || seconds <= limit_seconds; }
    bool passed() const { return failures.empty() && within_time(); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok && failures.size() < 50) failures.push_back(what());
    }
};

inline CheckResult timed(const std::string& name, double limit, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    r.limit_seconds = limit;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Subsets of the vertices that contain 0 and have at least two members.
inline std::vector<VertexSubset> subsets_with_zero(int vertices) {
    std::vector<VertexSubset> out;
    for (unsigned mask = 0; mask < (1u << (vertices - 1)); ++mask) {
        std::vector<int> m{0};
        for (int v = 1; v < vertices; ++v)
            if (mask & (1u << (v - 1))) m.push_back(v);
        if (m.size() >= 2) out.emplace_back(m);
    }
    return out;
}

inline std::vector<DynkinType> types_up_to(int max_vertices) {
    std::vector<DynkinType> out;
    for (int n = 1; n + 1 <= max_vertices; ++n) out.emplace_back(Family::A, n);
    for (int n = 4; n + 1 <= max_vertices; ++n) out.emplace_back(Family::D, n);
    for (int n = 6; n <= 8; ++n)
        if (n + 1 <= max_vertices) out.emplace_back(Family::E, n);
    return out;
}

inline std::string show(const FinAbGroup& g) { return g.to_string(); }

// ---- knitting ----

inline CheckResult knitting_tables() {
    return timed("knitting tables", 5, [](CheckResult& r) {
        int rows = 0;
        for (const auto& row : fixtures::knitting_rows()) {
            auto t = DynkinType::parse(row.type);
            for (const auto& e : fixtures::expand(row)) {
                auto g = gamma_quiver(t, VertexSubset(e.subset));
                for (int v : e.subset)
                    r.expect(g.count(0, v) == e.expected[v], [&] {
                        return std::string(row.type) + " " + VertexSubset(e.subset).to_string() + ": r(0," + std::to_string(v) +
                               ") = " + std::to_string(g.count(0, v)) + ", expected " + std::to_string(e.expected[v]);
                    });
            }
            ++rows;
        }
        r.notes.push_back(std::to_string(rows) + " table rows");
        r.expect(rows == 54, [&] { return "expected 54 table rows, found " + std::to_string(rows); });
    });
}

inline CheckResult symmetry_and_bound(int max_vertices = 9) {
    return timed("symmetry and bound", 60, [max_vertices](CheckResult& r) {
        long subsets = 0;
        for (const auto& t : types_up_to(max_vertices))
            for (const auto& s : subsets_with_zero(t.vertex_count())) {
                auto g = gamma_quiver(t, s);
                auto bad = gamma_violations(t, g);
                r.expect(bad.empty(), [&] { return t.name() + " " + s.to_string() + ": " + bad.front(); });
                ++subsets;
            }
        r.notes.push_back(std::to_string(subsets) + " subsets");
    });
}

inline CheckResult type_a_oracle(int max_n = 10) {
    return timed("type A closed form", 60, [max_n](CheckResult& r) {
        long subsets = 0;
        for (int n = 1; n <= max_n; ++n)
            for (const auto& s : subsets_with_zero(n + 1)) {
                auto g = gamma_quiver({Family::A, n}, s);
                auto c = type_a_closed_form(n, s);
                for (int i : s.members())
                    for (int j : s.members())
                        if (i != j)
                            r.expect(g.count(i, j) == c.count(i, j), [&] {
                                return "A" + std::to_string(n) + " " + s.to_string() + ": r(" + std::to_string(i) + "," +
                                       std::to_string(j) + ") = " + std::to_string(g.count(i, j)) + ", closed form " +
                                       std::to_string(c.count(i, j));
                            });
                ++subsets;
            }
        r.notes.push_back(std::to_string(subsets) + " subsets");
    });
}

// ---- hypersurfaces ----

inline CheckResult viehweg_formulas() {
    return timed("hypersurface formulas", 5, [](CheckResult& r) {
        long cases = 0;
        for (int t = 1; t <= 3; ++t) {
            std::vector<long> a(t, 1);
            for (;;) {
                ViehwegData d(a, 2);
                auto cl = class_group(d);
                std::string tag = "a=(";
                for (std::size_t i = 0; i < a.size(); ++i) tag += (i ? "," : "") + std::to_string(a[i]);
                tag += ")";
                for (long m = 2; m <= 12; ++m)
                    r.expect(oracle::quotient_order_mod({a}, t, m) == oracle::predicted_order_mod(cl, m),
                             [&] { return tag + ": Cl disagrees with coset count mod " + std::to_string(m); });
                r.expect(k0_stable_cm(d) == cl, [&] { return tag + ": stable K0 differs from Cl"; });
                r.expect(g0_cdv_type_a(d) == direct_sum(FinAbGroup::free(1), cl),
                         [&] { return tag + ": cDV G0 is not Z + Cl"; });
                r.expect(g0_surface(ViehwegData(a, 1)) == direct_sum(FinAbGroup::free(1), cl),
                         [&] { return tag + ": surface G0 is not Z + Cl"; });
                ++cases;
                int k = 0;
                while (k < t && a[k] == 4) a[k++] = 1;
                if (k == t) break;
                ++a[k];
            }
        }
        for (int c = 0; c <= 6; ++c) {
            auto rep = cdv_report(c);
            r.expect(rep.g0 == FinAbGroup::free(c + 1) && rep.cl == FinAbGroup::free(c) && rep.g0_equals_z_plus_cl,
                     [&] { return "cDV report with " + std::to_string(c) + " curves"; });
        }
        auto pinch = suspension_report(ViehwegData({2}), ViehwegData({1}, 3));
        r.expect(pinch.g0 == fixtures::z_plus({2}), [&] { return "pinch: G0 = " + show(pinch.g0); });
        r.expect(pinch.cl.is_trivial(), [&] { return "pinch: Cl = " + show(pinch.cl); });
        r.expect(!pinch.g0_equals_z_plus_cl, [] { return "pinch: G0 = Z + Cl should fail"; });
        r.notes.push_back(std::to_string(cases) + " exponent vectors");
    });
}

// ---- deformed preprojective ----

inline WeightVector random_weights(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(1, 8), num(0, 6), den(1, 5), coin(0, 2);
    int n = nd(rng);
    std::vector<Rational> l(n + 1);
    Rational s = 0;
    for (int i = 1; i <= n; ++i) {
        l[i] = coin(rng) == 0 ? Rational(0) : frac(num(rng), den(rng));
        s += l[i];
    }
    l[0] = -s;
    return WeightVector(l);
}

inline CheckResult preprojective(unsigned seed = 20240611) {
    return timed("deformed preprojective", 30, [seed](CheckResult& r) {
        for (int n = 1; n <= 4; ++n)
            for (int j = 1; j <= n; ++j)
                for (auto s : {RewriteStrategy::leftmost, RewriteStrategy::rightmost})
                    r.expect(verify_lemma_a2(n, j, s), [&] {
                        return "loop identity fails for n=" + std::to_string(n) + " j=" + std::to_string(j) +
                               (s == RewriteStrategy::leftmost ? " (leftmost)" : " (rightmost)");
                    });
        std::mt19937 rng(seed);
        int trials = 0;
        while (trials < 200) {
            auto w = random_weights(rng);
            if (!cbh_admissible(w)) continue;
            ++trials;
            auto g = g0_cbh(w);
            auto cl = cl_centre(w);
            r.expect(g == direct_sum(FinAbGroup::free(1), cl), [&] {
                return "weights n=" + std::to_string(w.n) + ": G0 = " + show(g) + ", Cl = " + show(cl);
            });
            auto expected_rank = static_cast<std::size_t>(w.n + 1) - zero_weight_vertices(w).size();
            r.expect(g.free_rank() == expected_rank, [&] {
                return "weights n=" + std::to_string(w.n) + ": rank " + std::to_string(g.free_rank()) + ", expected " +
                       std::to_string(expected_rank);
            });
        }
        r.notes.push_back(std::to_string(trials) + " random weight vectors");
    });
}

// ---- invariant rings ----

inline void check_group_row(CheckResult& r, const std::string& label, const MatrixGroup& g, Action a,
                            const FinAbGroup& g0, const FinAbGroup& cl, std::size_t budget) {
    auto rep = invariant_ring_report(g, a, budget);
    r.expect(rep.g0 == g0, [&] { return label + ": G0 = " + show(rep.g0) + ", expected " + show(g0); });
    r.expect(rep.reduced_g0 == torsion_part(g0),
             [&] { return label + ": reduced G0 = " + show(rep.reduced_g0) + ", expected " + show(torsion_part(g0)); });
    r.expect(rep.cl == cl, [&] { return label + ": Cl = " + show(rep.cl) + ", expected " + show(cl); });
}

inline CheckResult table_sl3(std::size_t budget = default_group_budget) {
    return timed("SL(3) quotient table", 300, [budget](CheckResult& r) {
        for (const auto& row : fixtures::sl3_rows()) {
            auto g = builtin(row.builtin, row.n, budget);
            check_group_row(r, g.name, g, row.symplectic ? Action::symplectic : Action::linear, row.g0, row.cl, budget);
        }
        r.notes.push_back(std::to_string(fixtures::sl3_rows().size()) + " groups");
    });
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// n = 2..5 always; larger n only when an explicit budget admits |S_n|.
inline CheckResult table_symmetric(std::optional<std::size_t> explicit_budget = std::nullopt) {
    return timed("symmetric group table", 600, [explicit_budget](CheckResult& r) {
        int max_n = 5;
        if (explicit_budget)
            while (max_n < 10 && static_cast<std::size_t>(factorial(max_n + 1)) <= *explicit_budget) ++max_n;
        std::size_t budget = explicit_budget.value_or(default_group_budget);
        for (const auto& row : fixtures::symmetric_rows(max_n)) {
            auto g = builtin(row.builtin, row.n, budget);
            check_group_row(r, "S" + std::to_string(row.n), g, Action::symplectic, row.g0, row.cl, budget);
        }
        r.notes.push_back("n = 2.." + std::to_string(max_n));
    });
}

// Every *.json in the given paths; directories are scanned one level deep.
inline std::vector<std::string> collect_group_files(const std::vector<std::string>& paths) {
    namespace fs = std::filesystem;
    std::vector<std::string> out;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> here;
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json") here.push_back(e.path().string());
            std::sort(here.begin(), here.end());
            out.insert(out.end(), here.begin(), here.end());
        } else {
            out.push_back(p);
        }
    }
    return out;
}

inline CheckResult reflection_group_files(const std::vector<std::string>& paths,
                                          std::size_t budget = default_group_budget) {
    return timed("reflection group files", 0, [&paths, budget](CheckResult& r) {
        auto files = collect_group_files(paths);
        int matched = 0;
        for (const auto& f : files) {
            auto gf = load_group_file(f, budget);
            if (!gf.shephard_todd) {
                r.notes.push_back(f + ": no shephard_todd key, skipped");
                continue;
            }
            const auto* row = fixtures::reflection_row(*gf.shephard_todd);
            if (!row) {
                r.notes.push_back(f + ": no table row for G" + std::to_string(*gf.shephard_todd) + ", skipped");
                continue;
            }
            check_group_row(r, "G" + std::to_string(row->number) + " (" + f + ")", gf.group, Action::symplectic,
                            row->g0, row->cl, budget);
            ++matched;
        }
        r.notes.push_back(std::to_string(matched) + " files matched to table rows");
    });
}

// ---- character-theoretic properties ----

struct NamedGroup {
    std::string label;
    MatrixGroup group;
};

inline std::vector<NamedGroup> property_groups() {
    std::vector<NamedGroup> out;
    for (const auto& row : fixtures::sl3_rows()) {
        auto g = builtin(row.builtin, row.n);
        out.push_back({g.name, std::move(g)});
    }
    for (int n = 2; n <= 8; ++n) out.push_back({"cyclic_sl2 " + std::to_string(n), cyclic_sl2(n)});
    for (int n = 2; n <= 5; ++n)
        out.push_back({"symmetric_reflection " + std::to_string(n), symmetric_reflection(n)});
    return out;
}

inline void check_orthogonality(CheckResult& r, const std::string& label, const ClassedGroup& cg,
                                const CharacterTable& t) {
    const int k = t.count();
    r.expect(k == cg.class_count(), [&] { return label + ": " + std::to_string(k) + " irreducibles"; });
    Integer sum = 0;
    for (int i = 0; i < k; ++i) {
        Integer d = t[i].degree();
        sum += d * d;
        r.expect(cg.order() % d == 0, [&] { return label + ": degree does not divide the order"; });
        for (int j = 0; j < k; ++j) {
            Cyclotomic ip = cg.inner(t[i], t[j]);
            r.expect(ip == Cyclotomic(i == j ? 1 : 0),
                     [&] { return label + ": <chi" + std::to_string(i) + ", chi" + std::to_string(j) + "> = " + ip.to_string(); });
        }
    }
    r.expect(sum == cg.order(), [&] { return label + ": squared degrees sum to the wrong value"; });
    // columns: sum over chi of chi(a) conj chi(b) = delta |C(a)|
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Cyclotomic s(Rational(0), cg.conductor);
            for (int i = 0; i < k; ++i) s += t[i][a] * t[i][b].conj();
            long expect = a == b ? cg.order() / cg.classes.size[a] : 0;
            r.expect(s == Cyclotomic(expect), [&] { return label + ": column orthogonality fails"; });
        }
}

inline void check_frobenius(CheckResult& r, const std::string& label, const ClassedGroup& cg, const CharacterTable& t,
                            std::mt19937& rng, int trials) {
    const auto& G = *cg.group;
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<int> gens{pick(rng)};
        if (trial % 2) gens.push_back(pick(rng));
        FiniteGroup H = G.subgroup(gens);
        ClassedGroup ch(H, cg.conductor);
        auto th = character_table(ch);
        const auto& psi = th[std::uniform_int_distribution<int>(0, th.count() - 1)(rng)];
        const auto& chi = t[std::uniform_int_distribution<int>(0, t.count() - 1)(rng)];
        auto lhs = cg.inner(induce_character(psi, ch, cg), chi);
        auto rhs = ch.inner(psi, restrict_character(chi, cg, ch));
        r.expect(lhs == rhs,
                 [&] { return label + ": reciprocity fails for a subgroup of order " + std::to_string(H.order()); });
    }
}

// The alternating sum of exterior powers against det(1 - g), for the
// defining representation when its degree is at most 3.
inline void check_koszul(CheckResult& r, const std::string& label, const GroupAnalysis& an) {
    const auto& g = an.group();
    if (g.degree > 3) return;
    const auto& cg = an.classed();
    auto chi = an.natural_character();
    auto k = cg.koszul_alternating(chi);
    auto top = cg.exterior_power(chi, g.degree);
    for (int c = 0; c < cg.class_count(); ++c) {
        const auto& m = g.elements[cg.classes.representative[c]];
        CycMatrix one_minus = CycMatrix::identity(g.degree, g.conductor);
        for (int i = 0; i < g.degree; ++i)
            for (int j = 0; j < g.degree; ++j) one_minus(i, j) -= m(i, j);
        Cyclotomic det = one_minus.determinant().in_field(cg.conductor);
        r.expect(k[c] == det, [&] { return label + ": Koszul character differs from det(1 - g)"; });
        r.expect(top[c] == m.determinant().in_field(cg.conductor),
                 [&] { return label + ": top exterior power differs from det g"; });
    }
}

// The double of the extended A_{n-1} diagram, with the character sending
// the generator to zeta^k at vertex k.
inline void check_mckay_cyclic(CheckResult& r, int n) {
    auto g = cyclic_sl2(n);
    GroupAnalysis an(g, Action::linear);
    auto m = an.mckay_quiver();
    const auto& irr = an.table();
    const auto& cg = an.classed();
    std::string label = "cyclic_sl2 " + std::to_string(n);
    int gc = cg.classes.class_of[g.abstract.generator(0)];
    std::vector<int> vertex(irr.count(), -1);
    for (int i = 0; i < irr.count(); ++i)
        for (int k = 0; k < n; ++k)
            if (irr[i][gc] == Cyclotomic::zeta(n, k).in_field(cg.conductor)) vertex[i] = k;
    for (int i = 0; i < irr.count(); ++i) r.expect(vertex[i] >= 0, [&] { return label + ": unrecognised character"; });
    IntMatrix expect(n, n);
    for (auto [a, b] : dynkin_edges(DynkinType(Family::A, n - 1))) {
        expect(a, b) += 1;
        expect(b, a) += 1;
    }
    for (int i = 0; i < irr.count(); ++i)
        for (int j = 0; j < irr.count(); ++j)
            if (vertex[i] >= 0 && vertex[j] >= 0)
                r.expect(m(i, j) == expect(vertex[i], vertex[j]),
                         [&] { return label + ": McKay quiver is not the doubled cycle"; });
}

inline CheckResult character_properties(unsigned seed = 7, int frobenius_trials = 100) {
    return timed("character properties", 120, [seed, frobenius_trials](CheckResult& r) {
        std::mt19937 rng(seed);
        auto groups = property_groups();
        for (const auto& ng : groups) {
            GroupAnalysis an(ng.group, Action::linear);
            const auto& t = an.table();
            check_orthogonality(r, ng.label, an.classed(), t);
            check_frobenius(r, ng.label, an.classed(), t, rng, frobenius_trials);
            check_koszul(r, ng.label, an);
            if (ng.group.degree == 2 && ng.label.rfind("cyclic_sl2", 0) == 0) {
                auto m = an.mckay_quiver();
                for (int i = 0; i < t.count(); ++i)
                    for (int j = 0; j < t.count(); ++j)
                        r.expect(m(i, j) == m(j, i), [&] { return ng.label + ": McKay quiver is not symmetric"; });
            }
        }
        for (int n = 2; n <= 8; ++n) check_mckay_cyclic(r, n);
        r.notes.push_back(std::to_string(groups.size()) + " groups");
    });
}

// ---- suites ----

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"knitting-tables", "lemma-a2", "orthogonality", "tables-5-7",
                                                   "viehweg",         "all"};
    return names;
}

struct SuiteOptions {
    std::vector<std::string> group_files;
    std::optional<std::size_t> budget;
};

inline std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt = {}) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    bool all = suite == "all";
    std::size_t budget = opt.budget.value_or(default_group_budget);
    std::vector<CheckResult> out;
    if (all || suite == "knitting-tables") {
        out.push_back(knitting_tables());
        out.push_back(symmetry_and_bound());
        out.push_back(type_a_oracle());
    }
    if (all || suite == "viehweg") out.push_back(viehweg_formulas());
    if (all || suite == "lemma-a2") out.push_back(preprojective());
    if (all || suite == "tables-5-7") {
        out.push_back(table_sl3(budget));
        out.push_back(table_symmetric(opt.budget));
        if (!opt.group_files.empty()) out.push_back(reflection_group_files(opt.group_files, budget));
    }
    if (all || suite == "orthogonality") out.push_back(character_properties());
    return out;
}

inline std::string format_result(const CheckResult& r, bool with_time = true) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checks << " checks";
    if (with_time) {
        os.setf(std::ios::fixed);
        os.precision(2);
        os << ", " << r.seconds << " s";
        if (r.limit_seconds > 0) os << " of " << r.limit_seconds << " s";
    }
    os << ")";
    for (const auto& n : r.notes) os << "\n      " << n;
    if (!r.within_time()) os << "\n      over the time limit";
    for (const auto& f : r.failures) os << "\n      " << f;
    return os.str();
}

}  // namespace duval::verify
