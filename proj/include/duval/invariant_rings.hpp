#pragma once

// Invariant rings of finite matrix groups: G_0 of S^G from induced Koszul
// characters, the class group through the abelianization of G modulo
// pseudoreflections, and McKay quivers.

#include "abelian_lattice.hpp"
#include "character_table.hpp"
#include "cyclotomic.hpp"
#include "finite_group.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

enum class Action { linear, symplectic };

inline const char* to_string(Action a) { return a == Action::linear ? "linear" : "symplectic"; }

inline Action parse_action(const std::string& s) {
    if (s == "linear") return Action::linear;
    if (s == "symplectic") return Action::symplectic;
    throw std::invalid_argument("unknown action '" + s + "' (expected linear or symplectic)");
}

class GroupFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MatrixGroup {
    std::string name;
    int degree = 0;
    int conductor = 1;  // field of the matrix entries
    std::vector<CycMatrix> generators;
    std::vector<CycMatrix> elements;  // elements[i] is abstract element i
    FiniteGroup abstract;

    int order() const { return abstract.order(); }
    int exponent() const { return abstract.exponent(); }
    // Field holding both the entries and every character value.
    int character_conductor() const { return std::lcm(conductor, exponent()); }
};

inline MatrixGroup group_closure(std::vector<CycMatrix> gens, std::size_t cap = default_group_budget,
                                 std::string name = "") {
    if (gens.empty()) throw std::invalid_argument("group_closure: need at least one generator");
    int n = gens[0].degree(), m = gens[0].conductor();
    for (auto& g : gens) {
        if (g.degree() != n) throw std::invalid_argument("group_closure: generators of different degrees");
        if (g.conductor() != m) throw std::invalid_argument("group_closure: generators over different fields");
        if (g.determinant().is_zero()) throw std::invalid_argument("group_closure: generator is not invertible");
    }
    MatrixGroup G;
    G.name = std::move(name);
    G.degree = n;
    G.conductor = m;
    G.generators = gens;
    G.abstract = FiniteGroup::close(
        CycMatrix::identity(n, m), gens, [](const CycMatrix& a, const CycMatrix& b) { return a * b; },
        CycMatrixHash{}, cap, &G.elements);
    return G;
}

// ---- builtin groups ----

inline Cyclotomic cq(long a, long b = 1, int m = 1) { return Cyclotomic(frac(a, b), m); }

inline MatrixGroup cyclic_sl3(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_sl3: n must be positive");
    auto g = CycMatrix::diagonal({Cyclotomic::zeta(n, 1), Cyclotomic::zeta(n, n - 1), cq(1, 1, n)}, n);
    return group_closure({g}, default_group_budget, "cyclic_sl3 " + std::to_string(n));
}

inline MatrixGroup dihedral_sl3(int n) {
    if (n < 2) throw std::invalid_argument("dihedral_sl3: n must be at least 2");
    auto a = CycMatrix::diagonal({Cyclotomic::zeta(n, 1), Cyclotomic::zeta(n, n - 1), cq(1, 1, n)}, n);
    auto b = CycMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}, n);
    return group_closure({a, b}, default_group_budget, "dihedral_sl3 " + std::to_string(n));
}

inline CycMatrix cyclic_permutation3(int m) { return CycMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, m); }

inline MatrixGroup trihedral() {
    auto a = CycMatrix::from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 1);
    return group_closure({a, cyclic_permutation3(1)}, default_group_budget, "trihedral");
}

inline MatrixGroup octahedral() {
    auto a = CycMatrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}, 1);
    return group_closure({a, cyclic_permutation3(1)}, default_group_budget, "octahedral");
}

inline MatrixGroup icosahedral() {
    const int m = 5;
    auto z = [](long k) { return Cyclotomic::zeta(5, k); };
    Cyclotomic s = z(2) + z(3), t = z(1) + z(4);
    Cyclotomic sqrt5 = cq(1, 1, m) + z(1).scaled(2) + z(4).scaled(2);
    Cyclotomic inv_sqrt5 = sqrt5.scaled(frac(1, 5));
    auto a = CycMatrix::diagonal({cq(1, 1, m), z(1), z(4)}, m);
    auto b = CycMatrix::from_rows({{1, 1, 1}, {2, s, t}, {2, t, s}}, m).scaled(inv_sqrt5);
    return group_closure({a, b}, default_group_budget, "icosahedral");
}

inline MatrixGroup cyclic_sl2(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_sl2: n must be positive");
    auto g = CycMatrix::diagonal({Cyclotomic::zeta(n, 1), Cyclotomic::zeta(n, n - 1)}, n);
    return group_closure({g}, default_group_budget, "cyclic_sl2 " + std::to_string(n));
}

// S_n on the sum-zero hyperplane of Q^n, in the basis f_i = e_i - e_n.
inline CycMatrix permutation_on_hyperplane(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    CycMatrix r(n - 1, 1);
    for (int i = 0; i < n - 1; ++i) {
        // sigma(f_i) = f_sigma(i) - f_sigma(n), with f_n = 0
        if (sigma[i] != n - 1) r(sigma[i], i) += Cyclotomic(1);
        if (sigma[n - 1] != n - 1) r(sigma[n - 1], i) -= Cyclotomic(1);
    }
    return r;
}

inline MatrixGroup symmetric_reflection(int n, std::size_t cap = default_group_budget) {
    if (n < 2) throw std::invalid_argument("symmetric_reflection: n must be at least 2");
    std::vector<int> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::vector<CycMatrix> gens{permutation_on_hyperplane(swap)};
    if (n > 2) gens.push_back(permutation_on_hyperplane(cycle));
    return group_closure(gens, cap, "symmetric_reflection " + std::to_string(n));
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"cyclic_sl3", "dihedral_sl3", "trihedral",           "octahedral",
                                                   "icosahedral", "cyclic_sl2",  "symmetric_reflection"};
    return names;
}

inline bool builtin_takes_parameter(const std::string& name) {
    return name == "cyclic_sl3" || name == "dihedral_sl3" || name == "cyclic_sl2" || name == "symmetric_reflection";
}

inline MatrixGroup builtin(const std::string& name, int n = 0, std::size_t cap = default_group_budget) {
    if (builtin_takes_parameter(name) && n == 0)
        throw std::invalid_argument("builtin '" + name + "' needs a parameter n");
    if (name == "cyclic_sl3") return cyclic_sl3(n);
    if (name == "dihedral_sl3") return dihedral_sl3(n);
    if (name == "trihedral") return trihedral();
    if (name == "octahedral") return octahedral();
    if (name == "icosahedral") return icosahedral();
    if (name == "cyclic_sl2") return cyclic_sl2(n);
    if (name == "symmetric_reflection") return symmetric_reflection(n, cap);
    throw std::invalid_argument("unknown builtin group '" + name + "'");
}

// ---- generator files ----

struct GroupFile {
    MatrixGroup group;
    std::optional<int> shephard_todd;
};

// {"conductor": m, "degree": n, "generators": [matrix, ...]} where a matrix
// is a list of rows and an entry is a list of [num, den, exp] triples summed
// as (num/den) * zeta_m^exp. "name", "shephard_todd" and "comment" are
// optional.
inline GroupFile parse_group_json(const nlohmann::json& j, std::size_t cap = default_group_budget) {
    auto fail = [](const std::string& msg) { throw GroupFormatError("group file: " + msg); };
    if (!j.is_object()) fail("top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& k = it.key();
        if (k != "conductor" && k != "degree" && k != "generators" && k != "name" && k != "shephard_todd" &&
            k != "comment")
            fail("unknown key '" + k + "'");
    }
    if (!j.contains("conductor") || !j["conductor"].is_number_integer()) fail("'conductor' must be an integer");
    if (!j.contains("degree") || !j["degree"].is_number_integer()) fail("'degree' must be an integer");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        fail("'generators' must be a nonempty list");
    long m = j["conductor"].get<long>(), n = j["degree"].get<long>();
    if (m < 1 || m > 100000) fail("'conductor' out of range");
    if (n < 1 || n > 16) fail("'degree' out of range");
    std::vector<CycMatrix> gens;
    for (std::size_t g = 0; g < j["generators"].size(); ++g) {
        const auto& mat = j["generators"][g];
        std::string where = "generator " + std::to_string(g);
        if (!mat.is_array() || static_cast<long>(mat.size()) != n) fail(where + " must have " + std::to_string(n) + " rows");
        CycMatrix M(static_cast<int>(n), static_cast<int>(m));
        for (long r = 0; r < n; ++r) {
            const auto& row = mat[r];
            if (!row.is_array() || static_cast<long>(row.size()) != n)
                fail(where + " row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
            for (long c = 0; c < n; ++c) {
                const auto& entry = row[c];
                if (!entry.is_array()) fail(where + " entry must be a list of triples");
                Cyclotomic v(Rational(0), static_cast<int>(m));
                for (const auto& t : entry) {
                    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
                        !t[2].is_number_integer())
                        fail(where + " terms must be [num, den, exp] integer triples");
                    long num = t[0].get<long>(), den = t[1].get<long>(), e = t[2].get<long>();
                    if (den == 0) fail(where + " has a zero denominator");
                    v += Cyclotomic::zeta(static_cast<int>(m), e).scaled(frac(num, den));
                }
                M(static_cast<int>(r), static_cast<int>(c)) = v;
            }
        }
        gens.push_back(std::move(M));
    }
    GroupFile out;
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "file";
    if (j.contains("shephard_todd")) {
        if (!j["shephard_todd"].is_number_integer()) fail("'shephard_todd' must be an integer");
        out.shephard_todd = j["shephard_todd"].get<int>();
        if (!j.contains("name")) name = "G" + std::to_string(*out.shephard_todd);
    }
    out.group = group_closure(std::move(gens), cap, name);
    return out;
}

inline GroupFile load_group_file(const std::string& path, std::size_t cap = default_group_budget) {
    std::ifstream in(path);
    if (!in) throw GroupFormatError("group file: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw GroupFormatError("group file: " + path + ": " + e.what());
    }
    return parse_group_json(j, cap);
}

// ---- analysis ----

// Everything derived from one group: classes, irreducibles, and the
// character of V (h in the linear case, h + h* in the symplectic case).
class GroupAnalysis {
public:
    GroupAnalysis(const MatrixGroup& g, Action a)
        : g_(&g), action_(a), cg_(g.abstract, g.character_conductor()) {}

    const MatrixGroup& group() const { return *g_; }
    Action action() const { return action_; }
    const ClassedGroup& classed() const { return cg_; }
    const ConjugacyClasses& classes() const { return cg_.classes; }

    const CharacterTable& table() const {
        if (!table_) table_ = std::make_unique<CharacterTable>(character_table(cg_));
        return *table_;
    }

    int vector_space_dimension() const { return action_ == Action::linear ? g_->degree : 2 * g_->degree; }

    Character natural_character() const {
        Character c;
        for (int k = 0; k < cg_.class_count(); ++k) {
            Cyclotomic t = g_->elements[cg_.classes.representative[k]].trace().in_field(cg_.conductor);
            if (action_ == Action::symplectic) t += t.conj();
            c.values.push_back(t);
        }
        return c;
    }

    // dim V^g as the average of the character over <g>.
    int fixed_dimension(int element) const {
        const auto& G = g_->abstract;
        auto chi = natural_character();
        int o = G.element_order(element);
        Cyclotomic s(Rational(0), cg_.conductor);
        for (int t = 0; t < o; ++t) s += chi[cg_.classes.class_of[G.power(element, t)]];
        return static_cast<int>(s.scaled(frac(1, o)).to_integer().get_si());
    }

    // Elements fixing a hyperplane of V pointwise.
    std::vector<int> pseudoreflections() const {
        std::vector<int> out;
        int dimv = vector_space_dimension();
        for (int k = 1; k < cg_.class_count(); ++k)
            if (fixed_dimension(cg_.classes.representative[k]) == dimv - 1)
                for (int x : cg_.classes.members[k]) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Hom(G/J, C^*) with J generated by the pseudoreflections.
    FinAbGroup class_group() const {
        const auto& G = g_->abstract;
        std::vector<int> seeds = pseudoreflections();
        auto gens = G.generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(G.commutator(gens[i], gens[j]));
        return G.abelian_quotient(G.normal_closure(seeds));
    }

    // m(i,j) = < V (x) rho_j, rho_i >
    IntMatrix mckay_quiver() const {
        const auto& irr = table();
        auto v = natural_character();
        int r = irr.count();
        IntMatrix m(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m(i, j) = cg_.inner_int(v * irr[j], irr[i]);
        return m;
    }

private:
    const MatrixGroup* g_;
    Action action_;
    ClassedGroup cg_;
    mutable std::unique_ptr<CharacterTable> table_;
};

struct BrownLorenzResult {
    FinAbGroup g0;
    FinAbGroup reduced;
    IntMatrix relations;  // one column per relation, over Z^{#irr}
    int subgroup_classes = 0;
    int irreducibles = 0;
};

inline std::size_t budget_from_env(std::size_t fallback = default_group_budget) {
    if (const char* s = std::getenv("DUVAL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

inline BrownLorenzResult brown_lorenz_g0(const GroupAnalysis& an, std::size_t budget = default_group_budget) {
    const auto& G = an.group().abstract;
    const auto& cg = an.classed();
    const int L = cg.conductor;
    const auto& irr = an.table();
    const Character V = an.natural_character();

    BrownLorenzResult res;
    res.irreducibles = irr.count();
    auto subs = subgroup_classes(G, budget);
    std::vector<std::vector<Integer>> cols;
    for (const auto& sc : subs) {
        if (sc.order() == 1) continue;
        ++res.subgroup_classes;
        FiniteGroup N = G.subgroup(G.generating_subset(sc.normalizer));
        ClassedGroup cn(N, L);
        auto nirr = character_table(cn);

        // how many elements of H fall in each class of N
        std::vector<int> local(G.order(), -1);
        for (int i = 0; i < N.order(); ++i) local[N.embedding()[i]] = i;
        std::vector<long> in_h(cn.class_count(), 0);
        for (int x : sc.elements) ++in_h[cn.classes.class_of[local[x]]];
        auto trivial_free_on_h = [&](const Character& chi) {
            Cyclotomic s(Rational(0), L);
            for (int c = 0; c < cn.class_count(); ++c)
                if (in_h[c]) s += chi[c].scaled(Rational(in_h[c]));
            return s.is_zero();
        };

        Character W = restrict_character(V, cg, cn);
        Character vh = cn.constant(0);
        std::vector<const Character*> sirr;
        for (const auto& chi : nirr.irreducibles) {
            if (!trivial_free_on_h(chi)) continue;
            sirr.push_back(&chi);
            Integer mult = cn.inner_int(chi, W);
            if (mult != 0) vh = vh + chi.scaled(Rational(mult));
        }
        Character aH = cn.koszul_alternating(vh);
        for (const Character* sigma : sirr) {
            Character ind = induce_character(aH * *sigma, cn, cg);
            std::vector<Integer> col;
            for (const auto& rho : irr.irreducibles) col.push_back(cg.inner_int(ind, rho));
            cols.push_back(std::move(col));
        }
    }
    res.relations = IntMatrix::from_columns(static_cast<std::size_t>(irr.count()), cols);
    res.g0 = cokernel(res.relations);
    res.reduced = torsion_part(res.g0);
    return res;
}

struct InvariantRingReport {
    std::string group;
    Action action = Action::linear;
    int order = 0;
    int classes = 0;
    FinAbGroup g0;
    FinAbGroup reduced_g0;
    FinAbGroup cl;
    int pseudoreflections = 0;
    int subgroup_classes = 0;
    bool g0_equals_z_plus_cl = false;
};

inline InvariantRingReport invariant_ring_report(const MatrixGroup& g, Action a,
                                                 std::size_t budget = default_group_budget) {
    GroupAnalysis an(g, a);
    auto bl = brown_lorenz_g0(an, budget);
    InvariantRingReport r;
    r.group = g.name;
    r.action = a;
    r.order = g.order();
    r.classes = an.classes().count();
    r.g0 = bl.g0;
    r.reduced_g0 = bl.reduced;
    r.cl = an.class_group();
    r.pseudoreflections = static_cast<int>(an.pseudoreflections().size());
    r.subgroup_classes = bl.subgroup_classes;
    r.g0_equals_z_plus_cl = r.g0 == direct_sum(FinAbGroup::free(1), r.cl);
    return r;
}

}  // namespace duval
