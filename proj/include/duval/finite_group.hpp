#pragma once

// Finite groups given by a right action of generators on 0..n-1, with 0 the
// identity. Elements are numbered in breadth-first order from the identity.

#include "abelian_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace duval {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_group_budget = 10000;

// Bit set over the elements of a group.
struct ElementSet {
    std::vector<std::uint64_t> bits;
    ElementSet() = default;
    explicit ElementSet(int n) : bits((n + 63) / 64, 0) {}
    bool test(int x) const { return bits[x >> 6] >> (x & 63) & 1; }
    void set(int x) { bits[x >> 6] |= std::uint64_t(1) << (x & 63); }
    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits == b.bits; }
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : s.bits) h = (h ^ w) * 1099511628211ull;
        return h;
    }
};

class FiniteGroup {
public:
    FiniteGroup() = default;

    // Breadth-first closure of arbitrary objects under right multiplication
    // by the generators. `key` must identify equal elements.
    template <class T, class Mul, class Hash, class Eq = std::equal_to<T>>
    static FiniteGroup close(const T& identity, const std::vector<T>& gens, Mul mul, Hash hash, std::size_t cap,
                             std::vector<T>* elements_out = nullptr, Eq eq = Eq{}) {
        std::vector<T> elems{identity};
        std::unordered_map<T, int, Hash, Eq> index(16, hash, eq);
        index.emplace(identity, 0);
        FiniteGroup g;
        g.ngens_ = static_cast<int>(gens.size());
        std::vector<int> rmul;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                T y = mul(elems[i], gens[k]);
                auto it = index.find(y);
                int yi;
                if (it == index.end()) {
                    yi = static_cast<int>(elems.size());
                    if (elems.size() >= cap)
                        throw BudgetExceeded("group order exceeds the budget of " + std::to_string(cap) + " elements");
                    index.emplace(y, yi);
                    elems.push_back(std::move(y));
                    g.parent_.push_back(static_cast<int>(i));
                    g.pgen_.push_back(static_cast<int>(k));
                } else {
                    yi = it->second;
                }
                rmul.push_back(yi);
            }
        }
        g.n_ = static_cast<int>(elems.size());
        g.rmul_ = std::move(rmul);
        g.finish();
        if (elements_out) *elements_out = std::move(elems);
        return g;
    }

    int order() const { return n_; }
    int generator_count() const { return ngens_; }
    int generator(int k) const { return rmul_[k]; }
    std::vector<int> generators() const {
        std::vector<int> out;
        for (int k = 0; k < ngens_; ++k) out.push_back(generator(k));
        return out;
    }

    // Indices of these elements in the group this one was cut out of.
    const std::vector<int>& embedding() const { return embedding_; }
    bool has_embedding() const { return !embedding_.empty(); }

    int mul(int a, int b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
        // walk the word of b from a
        int path[64];
        int depth = 0;
        std::vector<int> longpath;
        for (int x = b; x != 0; x = parent_[x]) {
            if (depth < 64) path[depth++] = x;
            else longpath.push_back(x);
        }
        int r = a;
        for (auto it = longpath.rbegin(); it != longpath.rend(); ++it) r = rmul_[r * ngens_ + pgen_[*it]];
        for (int d = depth - 1; d >= 0; --d) r = rmul_[r * ngens_ + pgen_[path[d]]];
        return r;
    }
    int inv(int a) const { return inv_[a]; }
    int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }  // g^-1 x g
    int commutator(int a, int b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

    int power(int a, long k) const {
        long o = element_order(a);
        k = ((k % o) + o) % o;
        int r = 0, base = a;
        while (k) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    int element_order(int a) const { return orders_[a]; }
    int exponent() const {
        long e = 1;
        for (int o : orders_) e = std::lcm(e, static_cast<long>(o));
        return static_cast<int>(e);
    }

    // Elements of the subgroup generated by `gens`, sorted.
    std::vector<int> closure(const std::vector<int>& gens) const {
        ElementSet seen(n_);
        std::vector<int> out{0};
        seen.set(0);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int g : gens) {
                int y = mul(out[i], g);
                if (!seen.test(y)) {
                    seen.set(y);
                    out.push_back(y);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    // The subgroup generated by `gens` as a group of its own.
    FiniteGroup subgroup(const std::vector<int>& gens) const {
        std::vector<int> elems;
        auto h = close(
            0, gens, [this](int a, int b) { return mul(a, b); }, std::hash<int>{},
            static_cast<std::size_t>(n_) + 1, &elems);
        h.embedding_ = std::move(elems);
        return h;
    }

    // A short generating list for the subgroup with these elements.
    std::vector<int> generating_subset(const std::vector<int>& elements) const {
        std::vector<int> gens;
        ElementSet in(n_);
        in.set(0);
        std::vector<int> cur{0};
        for (int x : elements) {
            if (in.test(x)) continue;
            gens.push_back(x);
            cur = closure(gens);
            for (int y : cur) in.set(y);
        }
        return gens;
    }

    // Smallest normal subgroup containing `seeds`.
    std::vector<int> normal_closure(const std::vector<int>& seeds) const {
        std::vector<int> gens;
        for (int s : seeds)
            if (s != 0) gens.push_back(s);
        auto elems = closure(gens);
        ElementSet in(n_);
        for (int x : elems) in.set(x);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int g : generators()) {
                int c = conj(gens[i], g);
                if (!in.test(c)) {
                    gens.push_back(c);
                    elems = closure(gens);
                    for (int x : elems) in.set(x);
                }
            }
        return elems;
    }

    std::vector<int> derived_subgroup() const {
        std::vector<int> comms;
        auto g = generators();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) comms.push_back(commutator(g[i], g[j]));
        return normal_closure(comms);
    }

    // Invariant factors of G/N for a normal subgroup N with G/N abelian,
    // from the counts #{x : x^(p^k) in N} for each prime p.
    FinAbGroup abelian_quotient(const std::vector<int>& normal) const {
        ElementSet in(n_);
        for (int x : normal) in.set(x);
        long q = n_ / static_cast<long>(normal.size());
        std::vector<Integer> orders;
        long rest = q;
        for (long p = 2; rest > 1; ++p) {
            if (rest % p) continue;
            while (rest % p == 0) rest /= p;
            // number of cyclic factors of order >= p^k is log_p(c_k / c_{k-1})
            long prev = 1;
            std::vector<int> at_least;
            for (long pk = p;; pk *= p) {
                long cnt = 0;
                for (int x = 0; x < n_; ++x)
                    if (in.test(power(x, pk))) ++cnt;
                long ck = cnt / static_cast<long>(normal.size());
                long ratio = ck / prev;
                int e = 0;
                while (ratio > 1) {
                    ratio /= p;
                    ++e;
                }
                if (e == 0) break;
                at_least.push_back(e);
                prev = ck;
            }
            // at_least[k-1] factors have order >= p^k
            for (std::size_t k = 0; k < at_least.size(); ++k) {
                int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
                Integer pk = 1;
                for (std::size_t t = 0; t <= k; ++t) pk *= p;
                for (int r = 0; r < exact; ++r) orders.push_back(pk);
            }
        }
        return FinAbGroup::from_cyclic_orders(0, orders);
    }

    FinAbGroup abelianization() const { return abelian_quotient(derived_subgroup()); }

private:
    void finish() {
        if (n_ <= table_limit) {
            table_.assign(static_cast<std::size_t>(n_) * n_, 0);
            for (int i = 0; i < n_; ++i) table_[static_cast<std::size_t>(i) * n_] = i;
            for (int j = 1; j < n_; ++j)
                for (int i = 0; i < n_; ++i)
                    table_[static_cast<std::size_t>(i) * n_ + j] =
                        rmul_[table_[static_cast<std::size_t>(i) * n_ + parent_[j]] * ngens_ + pgen_[j]];
        }
        inv_.assign(n_, -1);
        inv_[0] = 0;
        // inverse of a word is the reversed word of generator inverses
        std::vector<int> ginv(ngens_, 0);
        for (int k = 0; k < ngens_; ++k) {
            // g^-1 is the last power of g before the identity
            int g = generator(k);
            for (int y = g; y != 0; y = mul(y, g)) ginv[k] = y;
        }
        for (int x = 1; x < n_; ++x) inv_[x] = mul(ginv[pgen_[x]], inv_[parent_[x]]);
        orders_.assign(n_, 1);
        for (int x = 1; x < n_; ++x) {
            int o = 1, y = x;
            while (y != 0) {
                y = mul(y, x);
                ++o;
            }
            orders_[x] = o;
        }
    }

    static constexpr int table_limit = 2048;

    int n_ = 1;
    int ngens_ = 0;
    std::vector<int> rmul_;  // n x ngens
    std::vector<int> parent_{-1};
    std::vector<int> pgen_{-1};
    std::vector<int> table_;
    std::vector<int> inv_{0};
    std::vector<int> orders_{1};
    std::vector<int> embedding_;
};

struct ConjugacyClasses {
    std::vector<int> class_of;            // element -> class index
    std::vector<int> representative;      // smallest element of each class
    std::vector<int> size;
    std::vector<int> inverse_class;
    std::vector<int> rep_order;
    std::vector<std::vector<int>> members;

    int count() const { return static_cast<int>(representative.size()); }
};

// Orbits under conjugation by the generators; classes are listed by their
// smallest element, so the identity class comes first.
inline ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    ConjugacyClasses c;
    int n = g.order();
    c.class_of.assign(n, -1);
    auto gens = g.generators();
    for (int x = 0; x < n; ++x) {
        if (c.class_of[x] >= 0) continue;
        int id = c.count();
        c.representative.push_back(x);
        std::vector<int> orbit{x};
        c.class_of[x] = id;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int s : gens) {
                int y = g.conj(orbit[i], s);
                if (c.class_of[y] < 0) {
                    c.class_of[y] = id;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        c.size.push_back(static_cast<int>(orbit.size()));
        c.members.push_back(std::move(orbit));
        c.rep_order.push_back(g.element_order(x));
    }
    for (int k = 0; k < c.count(); ++k) c.inverse_class.push_back(c.class_of[g.inv(c.representative[k])]);
    return c;
}

struct SubgroupClass {
    std::vector<int> elements;    // sorted
    std::vector<int> generators;  // a generating subset
    std::vector<int> normalizer;  // sorted
    int conjugates = 1;
    int order() const { return static_cast<int>(elements.size()); }
};

// One representative per conjugacy class of subgroups, including the
// trivial subgroup and G. New subgroups are found as <K, g> for a known
// representative K; every subgroup arises this way from a smaller one.
inline std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, std::size_t budget = default_group_budget) {
    if (static_cast<std::size_t>(g.order()) > budget)
        throw BudgetExceeded("subgroup_classes: |G| = " + std::to_string(g.order()) + " exceeds the budget of " +
                             std::to_string(budget));
    const int n = g.order();
    const auto ggens = g.generators();
    std::unordered_set<ElementSet, ElementSetHash> known;
    std::vector<SubgroupClass> reps;

    auto to_set = [n](const std::vector<int>& elems) {
        ElementSet s(n);
        for (int x : elems) s.set(x);
        return s;
    };

    auto add = [&](std::vector<int> elems, std::vector<int> gens) {
        ElementSet s = to_set(elems);
        if (known.count(s)) return;
        // conjugates by breadth-first search over the generators of G
        std::vector<std::vector<int>> orbit{elems};
        known.insert(s);
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (int t : ggens) {
                std::vector<int> c;
                c.reserve(orbit[i].size());
                for (int x : orbit[i]) c.push_back(g.conj(x, t));
                std::sort(c.begin(), c.end());
                ElementSet cs = to_set(c);
                if (known.insert(cs).second) orbit.push_back(std::move(c));
            }
        SubgroupClass sc;
        sc.elements = std::move(elems);
        sc.generators = g.generating_subset(gens.empty() ? sc.elements : gens);
        sc.conjugates = static_cast<int>(orbit.size());
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int k : sc.generators)
                if (!s.test(g.conj(k, x))) {
                    ok = false;
                    break;
                }
            if (ok) sc.normalizer.push_back(x);
        }
        reps.push_back(std::move(sc));
    };

    add({0}, {});
    ElementSet cyclic_done(n);
    for (int x = 1; x < n; ++x) {
        if (cyclic_done.test(x)) continue;
        auto c = g.closure({x});
        // generators of the same cyclic group give the same subgroup
        for (int y : c)
            if (g.element_order(y) == g.element_order(x)) cyclic_done.set(y);
        add(c, {x});
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].order() == n) continue;
        // g and k1 g k2 (k in K), and N(K)-conjugates of g, give conjugate joins
        ElementSet seen(n);
        ElementSet inK = to_set(reps[i].elements);
        const auto kgens = reps[i].generators;
        const auto ngens = g.generating_subset(reps[i].normalizer);
        for (int x = 0; x < n; ++x) {
            if (inK.test(x) || seen.test(x)) continue;
            std::vector<int> orbit{x};
            seen.set(x);
            for (std::size_t a = 0; a < orbit.size(); ++a) {
                int y = orbit[a];
                auto push = [&](int z) {
                    if (!seen.test(z)) {
                        seen.set(z);
                        orbit.push_back(z);
                    }
                };
                for (int k : kgens) {
                    push(g.mul(k, y));
                    push(g.mul(y, k));
                }
                for (int t : ngens) push(g.conj(y, t));
            }
            auto gens = reps[i].generators;
            gens.push_back(x);
            add(g.closure(gens), gens);
        }
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [](const SubgroupClass& a, const SubgroupClass& b) { return a.order() < b.order(); });
    return reps;
}

}  // namespace duval
