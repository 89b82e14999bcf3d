#pragma once

// Character tables by the Dixon-Schneider method: common eigenvectors of the
// class matrices over a prime field containing the needed roots of unity,
// lifted to cyclotomic numbers through eigenvalue multiplicities.

#include "cyclotomic.hpp"
#include "finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

class CharacterTableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<unsigned __int128>(a) * b % p; }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p = 1 mod e with p > bound.
inline u64 choose_prime(u64 e, u64 bound) {
    u64 p = (bound / e + 1) * e + 1;
    while (!is_prime(p)) p += e;
    return p;
}

inline u64 primitive_root(u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw CharacterTableError("primitive_root: none found");
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Mat& a, u64 p) {
    std::vector<int> piv;
    std::size_t rows = a.size();
    if (!rows) return piv;
    std::size_t cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t s = r;
        while (s < rows && a[s][c] == 0) ++s;
        if (s == rows) continue;
        std::swap(a[r], a[s]);
        u64 iv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, iv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            u64 f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        piv.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);
    return piv;
}

// Basis of the null space of a (square), as rows.
inline Mat nullspace(Mat a, u64 p) {
    std::size_t n = a.empty() ? 0 : a[0].size();
    auto piv = rref(a, p);
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    Mat out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][f]) % p;
        out.push_back(v);
    }
    return out;
}

// Characteristic polynomial det(xI - a), lowest degree first, via
// reduction to Hessenberg form.
inline Vec charpoly(Mat h, u64 p) {
    int n = static_cast<int>(h.size());
    for (int m = 1; m < n - 1; ++m) {
        int i = m;
        while (i < n && h[i][m - 1] == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
        }
        u64 iv = invmod(h[m][m - 1], p);
        for (int r = m + 1; r < n; ++r) {
            u64 f = mulmod(h[r][m - 1], iv, p);
            if (!f) continue;
            for (int c = 0; c < n; ++c) h[r][c] = (h[r][c] + p - mulmod(f, h[m][c], p)) % p;
            for (int c = 0; c < n; ++c) h[c][m] = (h[c][m] + mulmod(f, h[c][r], p)) % p;
        }
    }
    std::vector<Vec> pk(n + 1);
    pk[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[i][k-1] prod h[j][j-1] p_i
        Vec cur(k + 1, 0);
        for (int d = 0; d < k; ++d) {
            cur[d + 1] = (cur[d + 1] + pk[k - 1][d]) % p;
            cur[d] = (cur[d] + p - mulmod(h[k - 1][k - 1], pk[k - 1][d], p)) % p;
        }
        u64 t = 1;
        for (int i = k - 2; i >= 0; --i) {
            t = mulmod(t, h[i + 1][i], p);
            u64 f = mulmod(t, h[i][k - 1], p);
            if (!f) continue;
            for (std::size_t d = 0; d < pk[i].size(); ++d) cur[d] = (cur[d] + p - mulmod(f, pk[i][d], p)) % p;
        }
        pk[k] = cur;
    }
    return pk[n];
}

inline u64 eval(const Vec& poly, u64 x, u64 p) {
    u64 r = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = (mulmod(r, x, p) + *it) % p;
    return r;
}

}  // namespace modp

struct Character {
    std::vector<Cyclotomic> values;  // one per conjugacy class

    const Cyclotomic& operator[](int k) const { return values[k]; }
    Cyclotomic& operator[](int k) { return values[k]; }
    std::size_t size() const { return values.size(); }
    Integer degree() const { return values[0].to_integer(); }

    friend Character operator+(const Character& a, const Character& b) {
        Character r = a;
        for (std::size_t k = 0; k < r.size(); ++k) r.values[k] += b.values[k];
        return r;
    }
    friend Character operator-(const Character& a, const Character& b) {
        Character r = a;
        for (std::size_t k = 0; k < r.size(); ++k) r.values[k] -= b.values[k];
        return r;
    }
    friend Character operator*(const Character& a, const Character& b) {
        Character r = a;
        for (std::size_t k = 0; k < r.size(); ++k) r.values[k] = a.values[k] * b.values[k];
        return r;
    }
    Character scaled(const Rational& q) const {
        Character r = *this;
        for (auto& v : r.values) v = v.scaled(q);
        return r;
    }
    friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

// A group with its classes, exposed together for the character calculus.
struct ClassedGroup {
    const FiniteGroup* group = nullptr;
    ConjugacyClasses classes;
    int conductor = 1;

    ClassedGroup() = default;
    ClassedGroup(const FiniteGroup& g, int m) : group(&g), classes(conjugacy_classes(g)), conductor(m) {
        if (m % g.exponent())
            throw std::invalid_argument("ClassedGroup: conductor " + std::to_string(m) +
                                        " is not a multiple of the exponent " + std::to_string(g.exponent()));
    }

    int order() const { return group->order(); }
    int class_count() const { return classes.count(); }

    // class of rep_k^t
    int power_class(int k, long t) const { return classes.class_of[group->power(classes.representative[k], t)]; }

    Character constant(long c) const {
        return Character{std::vector<Cyclotomic>(class_count(), Cyclotomic(Rational(c), conductor))};
    }
    Character trivial() const { return constant(1); }

    Cyclotomic inner(const Character& a, const Character& b) const {
        Cyclotomic s(Rational(0), conductor);
        for (int k = 0; k < class_count(); ++k) s += (a[k] * b[k].conj()).scaled(Rational(classes.size[k]));
        return s.scaled(frac(1, order()));
    }
    Integer inner_int(const Character& a, const Character& b) const { return inner(a, b).to_integer(); }

    // Newton's identities: k L_k(g) = sum_{i=1..k} (-1)^{i-1} L_{k-i}(g) chi(g^i).
    std::vector<Character> exterior_powers(const Character& chi, int kmax) const {
        std::vector<Character> lam{trivial()};
        for (int k = 1; k <= kmax; ++k) {
            Character cur = constant(0);
            for (int c = 0; c < class_count(); ++c) {
                Cyclotomic s(Rational(0), conductor);
                for (int i = 1; i <= k; ++i) {
                    auto term = lam[k - i][c] * chi[power_class(c, i)];
                    if (i % 2) s += term;
                    else s -= term;
                }
                cur[c] = s.scaled(frac(1, k));
            }
            lam.push_back(std::move(cur));
        }
        return lam;
    }
    Character exterior_power(const Character& chi, int k) const {
        if (k < 0) throw std::invalid_argument("exterior_power: negative k");
        return exterior_powers(chi, k)[k];
    }

    // sum_k (-1)^k Lambda^k chi, at g equal to det(1 - rho(g)).
    Character koszul_alternating(const Character& chi) const {
        long d = chi.degree().get_si();
        if (d < 0) throw std::invalid_argument("koszul_alternating: negative degree");
        auto lam = exterior_powers(chi, static_cast<int>(d));
        Character s = constant(0);
        for (long k = 0; k <= d; ++k) s = (k % 2) ? s - lam[k] : s + lam[k];
        return s;
    }
};

struct CharacterTable {
    std::vector<Character> irreducibles;  // trivial first, then by degree
    std::uint64_t prime = 0;
    int count() const { return static_cast<int>(irreducibles.size()); }
    const Character& operator[](int i) const { return irreducibles[i]; }
};

inline CharacterTable character_table(const ClassedGroup& cg) {
    using namespace modp;
    const auto& g = *cg.group;
    const auto& cl = cg.classes;
    const int r = cl.count();
    const int n = g.order();
    const int L = cg.conductor;

    u64 bound = static_cast<u64>(2 * std::sqrt(static_cast<double>(n))) + 1;
    u64 p = choose_prime(static_cast<u64>(L), bound);
    u64 z = powmod(primitive_root(p), (p - 1) / L, p);  // image of zeta_L

    // class matrix i: (M_i)[j][k] = #{x in C_i : x^-1 g_k in C_j}
    auto class_matrix = [&](int i) {
        Mat m(r, Vec(r, 0));
        for (int k = 0; k < r; ++k) {
            int gk = cl.representative[k];
            for (int x : cl.members[i]) ++m[cl.class_of[g.mul(g.inv(x), gk)]][k];
        }
        for (auto& row : m)
            for (auto& v : row) v %= p;
        return m;
    };

    // each space is an RREF basis (rows) of a sum of common eigenspaces
    std::vector<Mat> spaces;
    {
        Mat full(r, Vec(r, 0));
        for (int k = 0; k < r; ++k) full[k][k] = 1;
        spaces.push_back(full);
    }
    for (int i = 1; i < r; ++i) {
        bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; });
        if (all_split) break;
        Mat m = class_matrix(i);
        std::vector<Mat> next;
        for (auto& basis : spaces) {
            int s = static_cast<int>(basis.size());
            if (s == 1) {
                next.push_back(basis);
                continue;
            }
            auto piv = rref(basis, p);
            // restriction: column j holds the coordinates of M b_j
            Mat c(s, Vec(s, 0));
            std::vector<Vec> images(s, Vec(r, 0));
            for (int j = 0; j < s; ++j) {
                for (int a = 0; a < r; ++a) {
                    u64 acc = 0;
                    for (int b = 0; b < r; ++b)
                        if (basis[j][b]) acc = (acc + mulmod(m[a][b], basis[j][b], p)) % p;
                    images[j][a] = acc;
                }
                for (int l = 0; l < s; ++l) c[l][j] = images[j][piv[l]];
            }
            auto cp = charpoly(c, p);
            int found = 0;
            for (u64 lam = 0; lam < p && found < s; ++lam) {
                if (eval(cp, lam, p) != 0) continue;
                Mat shifted = c;
                for (int l = 0; l < s; ++l) shifted[l][l] = (shifted[l][l] + p - lam) % p;
                Mat ns = nullspace(shifted, p);
                if (ns.empty()) continue;
                Mat sub;
                for (auto& y : ns) {
                    Vec u(r, 0);
                    for (int l = 0; l < s; ++l)
                        if (y[l])
                            for (int b = 0; b < r; ++b) u[b] = (u[b] + mulmod(y[l], basis[l][b], p)) % p;
                    sub.push_back(u);
                }
                rref(sub, p);
                found += static_cast<int>(sub.size());
                next.push_back(sub);
            }
            if (found != s)
                throw CharacterTableError("character_table: class matrix " + std::to_string(i) +
                                          " is not diagonalisable mod " + std::to_string(p));
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != r)
        throw CharacterTableError("character_table: eigenspaces did not split into " + std::to_string(r) + " lines");

    CharacterTable table;
    table.prime = p;
    std::vector<u64> zpow(L);
    for (int k = 0; k < L; ++k) zpow[k] = powmod(z, k, p);

    for (auto& sp : spaces) {
        Vec w = sp[0];
        if (w[0] == 0) throw CharacterTableError("character_table: eigenvector vanishes at the identity");
        u64 iv = invmod(w[0], p);
        for (auto& x : w) x = mulmod(x, iv, p);
        // chi(1)^2 = |G| / sum_k w_k w_k* / h_k
        u64 s = 0;
        for (int k = 0; k < r; ++k)
            s = (s + mulmod(mulmod(w[k], w[cl.inverse_class[k]], p), invmod(cl.size[k] % p, p), p)) % p;
        u64 d2 = mulmod(n % p, invmod(s, p), p);
        u64 d = 0;
        for (u64 t = 1; t * t <= static_cast<u64>(n); ++t)
            if (t * t % p == d2) d = t;
        if (d == 0) throw CharacterTableError("character_table: no integral degree");
        Vec chi(r);
        for (int k = 0; k < r; ++k) chi[k] = mulmod(mulmod(w[k], d, p), invmod(cl.size[k] % p, p), p);

        Character c;
        c.values.resize(r);
        for (int k = 0; k < r; ++k) {
            int o = cl.rep_order[k];
            int step = L / o;  // zeta_o = zeta_L^step
            // multiplicity of the eigenvalue zeta_o^l
            Cyclotomic val(Rational(0), L);
            u64 total = 0;
            u64 io = invmod(static_cast<u64>(o) % p, p);
            for (int l = 0; l < o; ++l) {
                u64 acc = 0;
                for (int t = 0; t < o; ++t) {
                    long e = (static_cast<long>(L) - (static_cast<long>(l) * t % o) * step) % L;
                    acc = (acc + mulmod(chi[cg.power_class(k, t)], zpow[e], p)) % p;
                }
                u64 ml = mulmod(acc, io, p);
                if (ml > d) throw CharacterTableError("character_table: eigenvalue multiplicity out of range");
                total += ml;
                if (ml) val += Cyclotomic::zeta(L, static_cast<long>(l) * step).scaled(Rational(static_cast<long>(ml)));
            }
            if (total != d) throw CharacterTableError("character_table: multiplicities do not sum to the degree");
            c.values[k] = val;
        }
        table.irreducibles.push_back(std::move(c));
    }

    auto is_trivial = [](const Character& c) {
        return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
    };
    std::sort(table.irreducibles.begin(), table.irreducibles.end(), [&](const Character& a, const Character& b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        Integer da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.values < b.values;
    });

    Integer sum = 0;
    for (auto& c : table.irreducibles) sum += c.degree() * c.degree();
    if (sum != n) throw CharacterTableError("character_table: degrees squared do not sum to |G|");
    return table;
}

// Restriction along the embedding of `sub` (a subgroup built by
// FiniteGroup::subgroup of the group behind `parent`).
inline Character restrict_character(const Character& chi, const ClassedGroup& parent, const ClassedGroup& sub) {
    const auto& emb = sub.group->embedding();
    Character r;
    r.values.reserve(sub.class_count());
    for (int k = 0; k < sub.class_count(); ++k)
        r.values.push_back(chi[parent.classes.class_of[emb[sub.classes.representative[k]]]].in_field(sub.conductor));
    return r;
}

// Ind psi(g_k) = |G| / (|C_k| |H|) * sum over H-classes c inside C_k of |c| psi(c).
inline Character induce_character(const Character& psi, const ClassedGroup& sub, const ClassedGroup& parent) {
    const auto& emb = sub.group->embedding();
    std::vector<Cyclotomic> acc(parent.class_count(), Cyclotomic(Rational(0), parent.conductor));
    for (int c = 0; c < sub.class_count(); ++c) {
        int k = parent.classes.class_of[emb[sub.classes.representative[c]]];
        acc[k] += psi[c].scaled(Rational(sub.classes.size[c]));
    }
    Character r;
    for (int k = 0; k < parent.class_count(); ++k)
        r.values.push_back(
            acc[k].scaled(frac(parent.order(), Integer(parent.classes.size[k]) * sub.order())));
    return r;
}

}  // namespace duval
