#pragma once

// Type A deformed preprojective algebras: the centre as a hypersurface,
// its class group, the Grothendieck group from the Cartan presentation, and
// a rewriting check of the product formula for c_0..c_j d_j..d_0.

#include "abelian_lattice.hpp"
#include "hypersurface_ktheory.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

struct WeightVector {
    int n = 0;                    // rank of A~n, so n+1 vertices
    std::vector<Rational> lambda;  // lambda_0..lambda_n

    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> l) : n(static_cast<int>(l.size()) - 1), lambda(std::move(l)) {
        validate();
    }

    void validate() const {
        if (n < 1 || static_cast<int>(lambda.size()) != n + 1)
            throw std::invalid_argument("WeightVector: need lambda_0..lambda_n with n >= 1");
        Rational s = 0;
        for (auto& x : lambda) s += x;
        if (s != 0) throw std::invalid_argument("WeightVector: weights must sum to zero, sum is " + s.get_str());
    }

    // "3/2" style; whitespace is not allowed inside an entry.
    static WeightVector parse(const std::string& csv) {
        std::vector<Rational> l;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            Rational q;
            if (q.set_str(tok, 10) != 0) throw std::invalid_argument("WeightVector: bad rational '" + tok + "'");
            q.canonicalize();
            l.push_back(q);
        }
        return WeightVector(std::move(l));
    }
};

struct CentrePresentation {
    std::vector<Rational> roots;               // s_0 = 0, s_k = lambda_1 + ... + lambda_k
    std::vector<std::vector<int>> blocks;      // indices with equal roots, ordered by first index
    std::vector<long> exponents;               // block sizes, sorted ascending
    std::size_t t() const { return exponents.size(); }
};

inline CentrePresentation centre_presentation(const WeightVector& w) {
    w.validate();
    CentrePresentation c;
    Rational s = 0;
    c.roots.push_back(s);
    for (int k = 1; k <= w.n; ++k) {
        s += w.lambda[k];
        c.roots.push_back(s);
    }
    for (int k = 0; k <= w.n; ++k) {
        bool placed = false;
        for (auto& b : c.blocks)
            if (c.roots[b.front()] == c.roots[k]) {
                b.push_back(k);
                placed = true;
                break;
            }
        if (!placed) c.blocks.push_back({k});
    }
    for (auto& b : c.blocks) c.exponents.push_back(static_cast<long>(b.size()));
    std::sort(c.exponents.begin(), c.exponents.end());
    return c;
}

inline FinAbGroup cl_centre(const WeightVector& w) {
    return class_group(ViehwegData(centre_presentation(w).exponents, 1));
}

// Vertices i in 1..n with lambda_i = 0.
inline std::vector<int> zero_weight_vertices(const WeightVector& w) {
    std::vector<int> out;
    for (int i = 1; i <= w.n; ++i)
        if (w.lambda[i] == 0) out.push_back(i);
    return out;
}

inline bool cbh_admissible(const WeightVector& w) {
    for (int i = 1; i <= w.n; ++i)
        if (w.lambda[i] < 0) return false;
    return true;
}

// Z^{n+1} modulo the Cartan columns of the zero-weight vertices.
inline FinAbGroup g0_cbh(const WeightVector& w) {
    w.validate();
    for (int i = 1; i <= w.n; ++i)
        if (w.lambda[i] < 0)
            throw std::invalid_argument("g0_cbh: needs lambda_i >= 0 for i >= 1, lambda_" + std::to_string(i) +
                                        " = " + w.lambda[i].get_str());
    auto zi = zero_weight_vertices(w);
    int m = w.n + 1;
    IntMatrix a(m, zi.size());
    for (std::size_t c = 0; c < zi.size(); ++c) {
        int i = zi[c];
        a(i, c) += 2;
        a((i + m - 1) % m, c) -= 1;
        a((i + 1) % m, c) -= 1;
    }
    return cokernel(a);
}

// Commutative polynomials over Q in l_1..l_n.
class Poly {
public:
    using Monomial = std::vector<int>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    // l_i for 1 <= i <= nvars
    static Poly var(int nvars, int i) {
        if (i < 1 || i > nvars) throw std::out_of_range("Poly::var: index out of range");
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[i - 1] = 1;
        p.terms_[m] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly(a.nvars_) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = abs(c);
            bool unit = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (a != 1 || unit) os << a.get_str();
            bool star = a != 1 || unit;
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (star) os << '*';
                os << 'l' << (k + 1);
                if (m[k] > 1) os << '^' << m[k];
                star = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

// Letters of the double quiver of A~n: c_i : i -> i+1 and d_i : i+1 -> i,
// vertices mod n+1. Paths compose left to right.
struct Letter {
    bool up = true;  // c when true, d otherwise
    int index = 0;
    friend bool operator<(const Letter& a, const Letter& b) {
        return a.up != b.up ? a.up > b.up : a.index < b.index;
    }
    friend bool operator==(const Letter& a, const Letter& b) { return a.up == b.up && a.index == b.index; }
};

using Word = std::vector<Letter>;

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "e0";
    std::string s;
    for (auto& l : w) {
        if (!s.empty()) s += ' ';
        s += (l.up ? 'c' : 'd') + std::to_string(l.index);
    }
    return s;
}

// "c0 c1 d1 d0"; an empty string or "e0" is the trivial path at 0.
inline Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "e0") continue;
        if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 'd'))
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        w.push_back({tok[0] == 'c', std::stoi(tok.substr(1))});
    }
    return w;
}

class PathError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Loops at vertex 0 tracked by height on the universal cover: c_i needs
// height i, d_i needs height i+1, and the height has to stay in [0, n+1]
// and return to 0. Anything else is rejected.
inline void check_loop_at_zero(int n, const Word& w) {
    int m = n + 1;
    int h = 0, vertex = 0;
    for (auto& l : w) {
        if (l.index < 0 || l.index > n)
            throw PathError("path: letter index " + std::to_string(l.index) + " out of range for n=" + std::to_string(n));
        int tail = l.up ? l.index : (l.index + 1) % m;
        if (tail != vertex) throw PathError("path: '" + word_to_string(w) + "' is not composable");
        vertex = l.up ? (l.index + 1) % m : l.index;
        if (l.up) {
            if (h != l.index) throw PathError("path: '" + word_to_string(w) + "' wraps around the cycle");
            ++h;
        } else {
            if (h != l.index + 1) throw PathError("path: '" + word_to_string(w) + "' wraps around the cycle");
            --h;
        }
    }
    if (h != 0) throw PathError("path: '" + word_to_string(w) + "' is not a contractible loop at vertex 0");
}

class PathExpression {
public:
    PathExpression() = default;
    explicit PathExpression(int n) : n_(n) {}

    static PathExpression word(int n, const Word& w) {
        PathExpression p(n);
        p.add(w, Poly::constant(n, 1));
        return p;
    }

    int n() const { return n_; }
    const std::map<Word, Poly>& terms() const { return terms_; }

    void add(const Word& w, const Poly& coeff) {
        check_loop_at_zero(n_, w);
        if (coeff.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const PathExpression& a, const PathExpression& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*" + word_to_string(w);
        }
        return s;
    }

private:
    int n_ = 0;
    std::map<Word, Poly> terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

// Position of a c_i d_i subword with i >= 1, or -1.
inline int find_redex(const Word& w, RewriteStrategy s) {
    int k = static_cast<int>(w.size());
    if (s == RewriteStrategy::leftmost) {
        for (int a = 0; a + 1 < k; ++a)
            if (w[a].up && !w[a + 1].up && w[a].index == w[a + 1].index && w[a].index >= 1) return a;
    } else {
        for (int a = k - 2; a >= 0; --a)
            if (w[a].up && !w[a + 1].up && w[a].index == w[a + 1].index && w[a].index >= 1) return a;
    }
    return -1;
}

// Applies c_i d_i -> d_{i-1} c_{i-1} - l_i e_i until no redex is left.
inline PathExpression rewrite_normal_form(const PathExpression& p, RewriteStrategy s = RewriteStrategy::leftmost) {
    int n = p.n();
    PathExpression cur = p;
    for (;;) {
        PathExpression next(n);
        bool changed = false;
        for (auto& [w, c] : cur.terms()) {
            int a = find_redex(w, s);
            if (a < 0) {
                next.add(w, c);
                continue;
            }
            changed = true;
            int i = w[a].index;
            Word swapped(w);
            swapped[a] = {false, i - 1};
            swapped[a + 1] = {true, i - 1};
            next.add(swapped, c);
            Word shorter(w.begin(), w.begin() + a);
            shorter.insert(shorter.end(), w.begin() + a + 2, w.end());
            next.add(shorter, -(c * Poly::var(n, i)));
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
}

// Coefficients of x^k with x = c_0 d_0; fails if a term is not a power of x.
inline std::map<int, Poly> as_polynomial_in_x(const PathExpression& p) {
    std::map<int, Poly> out;
    for (auto& [w, c] : p.terms()) {
        if (w.size() % 2) throw PathError("as_polynomial_in_x: odd word");
        for (std::size_t a = 0; a < w.size(); a += 2)
            if (!(w[a] == Letter{true, 0}) || !(w[a + 1] == Letter{false, 0}))
                throw PathError("as_polynomial_in_x: '" + word_to_string(w) + "' is not a power of c0 d0");
        int k = static_cast<int>(w.size() / 2);
        auto [it, fresh] = out.try_emplace(k, c);
        if (!fresh) it->second += c;
    }
    return out;
}

inline Word lemma_word(int j) {
    Word w;
    for (int i = 0; i <= j; ++i) w.push_back({true, i});
    for (int i = j; i >= 0; --i) w.push_back({false, i});
    return w;
}

// x * prod_{k=1..j} (x - (l_1 + ... + l_k)) as x-power -> coefficient.
inline std::map<int, Poly> lemma_target(int n, int j) {
    std::map<int, Poly> cur{{1, Poly::constant(n, 1)}};
    Poly s(n);
    for (int k = 1; k <= j; ++k) {
        s += Poly::var(n, k);
        std::map<int, Poly> next;
        for (auto& [e, c] : cur) {
            auto [it1, f1] = next.try_emplace(e + 1, c);
            if (!f1) it1->second += c;
            Poly t = -(c * s);
            auto [it0, f0] = next.try_emplace(e, t);
            if (!f0) it0->second += t;
        }
        cur.clear();
        for (auto& [e, c] : next)
            if (!c.is_zero()) cur.emplace(e, c);
    }
    return cur;
}

inline std::string x_polynomial_to_string(const std::map<int, Poly>& p) {
    if (p.empty()) return "0";
    std::string s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.to_string() + ")";
        if (it->first > 0) s += "*x^" + std::to_string(it->first);
    }
    return s;
}

inline bool verify_lemma_a2(int n, int j, RewriteStrategy s = RewriteStrategy::leftmost) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("verify_lemma_a2: need 1 <= j <= n");
    auto lhs = as_polynomial_in_x(rewrite_normal_form(PathExpression::word(n, lemma_word(j)), s));
    return lhs == lemma_target(n, j);
}

struct PreprojReport {
    WeightVector weights;
    CentrePresentation centre;
    FinAbGroup cl;
    bool admissible = false;  // lambda_i >= 0 for i >= 1
    FinAbGroup g0_cbh;        // only meaningful when admissible
    FinAbGroup g0_centre;     // Z + Cl
    bool consistent = false;  // g0_cbh == g0_centre, when admissible
};

inline PreprojReport preproj_report(const WeightVector& w) {
    PreprojReport r;
    r.weights = w;
    r.centre = centre_presentation(w);
    r.cl = cl_centre(w);
    r.g0_centre = direct_sum(FinAbGroup::free(1), r.cl);
    r.admissible = cbh_admissible(w);
    if (r.admissible) {
        r.g0_cbh = g0_cbh(w);
        r.consistent = r.g0_cbh == r.g0_centre;
    }
    return r;
}

}  // namespace duval
