#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m), power basis reduced
// modulo the m-th cyclotomic polynomial.

#include "abelian_lattice.hpp"

#include <gmpxx.h>

#include <complex>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

namespace detail {

struct CyclotomicField;
inline const CyclotomicField& field(int m);

inline std::vector<Integer> compute_cyclotomic_polynomial(int m);

// Power-basis coordinates of zeta^k for k = 0..m-1.
struct CyclotomicField {
    int m = 1;
    int phi = 1;
    std::vector<Integer> poly;
    std::vector<std::vector<Integer>> powers;

    explicit CyclotomicField(int mm) : m(mm) {
        poly = compute_cyclotomic_polynomial(m);
        phi = static_cast<int>(poly.size()) - 1;
        powers.assign(m, std::vector<Integer>(phi, 0));
        std::vector<Integer> cur(phi, 0);
        cur[0] = 1;
        for (int k = 0; k < m; ++k) {
            powers[k] = cur;
            // multiply by x and reduce: x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1})
            Integer top = cur[phi - 1];
            for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0)
                for (int j = 0; j < phi; ++j) cur[j] -= top * poly[j];
        }
    }
};

// Phi_m with integer coefficients, lowest degree first.
inline std::vector<Integer> compute_cyclotomic_polynomial(int m) {
    // x^m - 1 divided by every Phi_d with d | m, d < m
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        const auto& den = field(d).poly;
        // exact division by a monic polynomial
        int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
        std::vector<Integer> q(dn - dd + 1, 0);
        for (int k = dn - dd; k >= 0; --k) {
            q[k] = num[k + dd];
            for (int j = 0; j <= dd; ++j) num[k + j] -= q[k] * den[j];
        }
        num = std::move(q);
    }
    return num;
}

inline const CyclotomicField& field(int m) {
    // recursive: building Phi_m asks for Phi_d of the divisors
    static std::recursive_mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<CyclotomicField>(m);
    return *slot;
}

}  // namespace detail

inline const std::vector<Integer>& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
    return detail::field(m).poly;
}

inline int euler_phi(int m) { return detail::field(m).phi; }

class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1, 0) {}
    Cyclotomic(long q) : m_(1), c_(1, Rational(q)) {}  // NOLINT: implicit from integers
    Cyclotomic(const Rational& q, int m = 1) : m_(m), c_(detail::field(check(m)).phi, 0) { c_[0] = q; }

    // zeta_m^k, any integer k.
    static Cyclotomic zeta(int m, long k = 1) {
        const auto& f = detail::field(check(m));
        Cyclotomic z;
        z.m_ = m;
        long r = ((k % m) + m) % m;
        z.c_.assign(f.powers[r].begin(), f.powers[r].end());
        return z;
    }

    // sum of coefficient * zeta_m^exponent
    static Cyclotomic from_terms(int m, const std::vector<std::pair<Rational, long>>& terms) {
        Cyclotomic s(Rational(0), m);
        for (auto& [q, e] : terms) s += zeta(m, e) * Cyclotomic(q, m);
        return s;
    }

    int conductor() const { return m_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    // The same number written in Q(zeta_M), M a multiple of the conductor.
    Cyclotomic in_field(int M) const {
        if (M == m_) return *this;
        if (M % m_) throw std::invalid_argument("Cyclotomic::in_field: " + std::to_string(M) +
                                                " is not a multiple of " + std::to_string(m_));
        const auto& f = detail::field(M);
        Cyclotomic r(Rational(0), M);
        int step = M / m_;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const auto& p = f.powers[(k * step) % M];
            for (int j = 0; j < f.phi; ++j)
                if (p[j] != 0) r.c_[j] += c_[k] * p[j];
        }
        return r;
    }

    bool is_zero() const {
        for (auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }
    Rational rational() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: " + to_string() + " is not rational");
        return c_[0];
    }
    Integer to_integer() const {
        Rational q = rational();
        if (q.get_den() != 1) throw std::domain_error("Cyclotomic: " + to_string() + " is not an integer");
        return q.get_num();
    }

    // zeta -> zeta^{-1}
    Cyclotomic conj() const {
        const auto& f = detail::field(m_);
        Cyclotomic r(Rational(0), m_);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const auto& p = f.powers[(m_ - static_cast<int>(k)) % m_];
            for (int j = 0; j < f.phi; ++j)
                if (p[j] != 0) r.c_[j] += c_[k] * p[j];
        }
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        if (o.m_ != m_) return *this = *this + o;
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        if (o.m_ != m_) return *this = *this - o;
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ != b.m_) {
            int L = std::lcm(a.m_, b.m_);
            return a.in_field(L) + b.in_field(L);
        }
        Cyclotomic r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ != b.m_) {
            int L = std::lcm(a.m_, b.m_);
            return a.in_field(L) - b.in_field(L);
        }
        Cyclotomic r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ != b.m_) {
            // a rational factor needs no change of field
            if (a.m_ == 1 || a.is_rational()) return b.scaled(a.c_[0]);
            if (b.m_ == 1 || b.is_rational()) return a.scaled(b.c_[0]);
            int L = std::lcm(a.m_, b.m_);
            return a.in_field(L) * b.in_field(L);
        }
        const auto& f = detail::field(a.m_);
        int phi = f.phi;
        std::vector<Rational> conv(2 * phi - 1, 0);
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j)
                if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
        }
        Cyclotomic r(Rational(0), a.m_);
        for (int k = 0; k < phi; ++k) r.c_[k] = conv[k];
        for (int k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& p = f.powers[k % a.m_];
            for (int j = 0; j < phi; ++j)
                if (p[j] != 0) r.c_[j] += conv[k] * p[j];
        }
        return r;
    }

    Cyclotomic scaled(const Rational& q) const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x *= q;
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ == b.m_) return a.c_ == b.c_;
        int L = std::lcm(a.m_, b.m_);
        return a.in_field(L).c_ == b.in_field(L).c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Lexicographic order on coefficients; only meaningful at equal conductor.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ != b.m_) {
            int L = std::lcm(a.m_, b.m_);
            return a.in_field(L) < b.in_field(L);
        }
        return a.c_ < b.c_;
    }

    std::complex<double> numeric() const {
        std::complex<double> s = 0;
        const double pi = std::acos(-1.0);
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) s += c_[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / m_);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(m_);
        for (auto& x : c_) {
            h = h * 1000003u ^ mpz_get_ui(x.get_num_mpz_t());
            h = h * 1000003u ^ (mpz_sgn(x.get_num_mpz_t()) < 0 ? 7u : 0u);
            h = h * 1000003u ^ mpz_get_ui(x.get_den_mpz_t());
        }
        return h;
    }

    // "3/2 - z12^3 + 2*z12^5" with zN for zeta_N; rationals print plainly.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& q = c_[k];
            if (q == 0) continue;
            Rational a = abs(q);
            os << (q < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (k == 0) os << a.get_str();
            else {
                if (a != 1) os << a.get_str() << '*';
                os << 'z' << m_;
                if (k > 1) os << '^' << k;
            }
            first = false;
        }
        if (first) os << '0';
        return os.str();
    }

private:
    static int check(int m) {
        if (m < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
        return m;
    }

    int m_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

// Square matrices over one cyclotomic field.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int n, int m) : n_(n), m_(m), a_(static_cast<std::size_t>(n) * n, Cyclotomic(Rational(0), m)) {}

    static CycMatrix identity(int n, int m) {
        CycMatrix r(n, m);
        for (int i = 0; i < n; ++i) r(i, i) = Cyclotomic(Rational(1), m);
        return r;
    }
    static CycMatrix diagonal(const std::vector<Cyclotomic>& d, int m) {
        CycMatrix r(static_cast<int>(d.size()), m);
        for (int i = 0; i < r.n_; ++i) r(i, i) = d[i].in_field(m);
        return r;
    }
    static CycMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows, int m) {
        int n = static_cast<int>(rows.size());
        CycMatrix r(n, m);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("CycMatrix: matrix is not square");
            for (int j = 0; j < n; ++j) r(i, j) = rows[i][j].in_field(m);
        }
        return r;
    }

    int degree() const { return n_; }
    int conductor() const { return m_; }
    Cyclotomic& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Cyclotomic& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.n_ != b.n_ || a.m_ != b.m_) throw std::invalid_argument("CycMatrix: shape or field mismatch");
        CycMatrix r(a.n_, a.m_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const CycMatrix& a, const CycMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    CycMatrix scaled(const Cyclotomic& s) const {
        CycMatrix r = *this;
        for (auto& x : r.a_) x = (x * s).in_field(m_);
        return r;
    }

    Cyclotomic trace() const {
        Cyclotomic t(Rational(0), m_);
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    CycMatrix transpose() const {
        CycMatrix r(n_, m_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Division-free expansion over column subsets; fine for the small
    // degrees used here.
    Cyclotomic determinant() const {
        if (n_ == 0) return Cyclotomic(Rational(1), m_);
        std::vector<Cyclotomic> memo(std::size_t(1) << n_, Cyclotomic(Rational(0), m_));
        std::vector<char> done(memo.size(), 0);
        memo[0] = Cyclotomic(Rational(1), m_);
        done[0] = 1;
        // det of rows [n - popcount(mask), n) restricted to columns in mask
        for (std::size_t mask = 1; mask < memo.size(); ++mask) {
            int k = __builtin_popcountll(mask);
            int row = n_ - k;
            Cyclotomic s(Rational(0), m_);
            int sign_pos = 0;
            for (int c = 0; c < n_; ++c) {
                if (!(mask >> c & 1)) continue;
                const auto& x = (*this)(row, c);
                if (!x.is_zero()) {
                    auto term = x * memo[mask & ~(std::size_t(1) << c)];
                    if (sign_pos % 2) s -= term;
                    else s += term;
                }
                ++sign_pos;
            }
            memo[mask] = s;
        }
        return memo.back();
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto& x : a_) h = h * 31 + x.hash();
        return h;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (int i = 0; i < n_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        }
        os << ']';
        return os.str();
    }

private:
    int n_ = 0;
    int m_ = 1;
    std::vector<Cyclotomic> a_;
};

struct CycMatrixHash {
    std::size_t operator()(const CycMatrix& m) const { return m.hash(); }
};

}  // namespace duval
