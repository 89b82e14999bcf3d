#pragma once

// Exact integer lattices: Smith normal form, cokernels and canonical
// finitely generated abelian groups.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace duval {

using Integer = mpz_class;
using Rational = mpq_class;

// a/b in lowest terms
inline Rational frac(const Integer& a, const Integer& b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
            std::size_t j = 0;
            for (long x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    // Builds the matrix whose columns are the given vectors (all of length rows).
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Integer>& entries() const { return data_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
    }
    // col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    // Bareiss fraction-free elimination.
    Integer determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Integer prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && m(p, k) == 0) ++p;
                if (p == n) return 0;
                m.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    m(i, j) = t;
                }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithDecomposition {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix s;  // rows x cols, diagonal
    IntMatrix v;  // cols x cols, unimodular

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
        return d;
    }
};

namespace detail {

// Reduces `s` in place; row operations are mirrored into `u`, column
// operations into `v` when they are non-null.
inline void smith_reduce(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
    const std::size_t m = s.rows(), n = s.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero |entry| of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s(i, j) == 0) continue;
                    if (pi == m || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0) { pi = i; pj = j; }
                }
            if (pi == m) return;
            s.swap_rows(t, pi);
            if (u) u->swap_rows(t, pi);
            s.swap_cols(t, pj);
            if (v) v->swap_cols(t, pj);

            bool dirty = false;
            Integer q;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                q = -q;
                s.add_row(i, t, q);
                if (u) u->add_row(i, t, q);
                if (s(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                q = -q;
                s.add_col(j, t, q);
                if (v) v->add_col(j, t, q);
                if (s(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the whole trailing block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) { bad = i; break; }
            if (bad == m) break;
            s.add_row(t, bad, 1);
            if (u) u->add_row(t, bad, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            if (u) u->negate_row(t);
        }
    }
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition d{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    detail::smith_reduce(d.s, &d.u, &d.v);
    return d;
}

// Diagonal of the Smith form without tracking transforms.
inline std::vector<Integer> elementary_divisors(const IntMatrix& a) {
    IntMatrix s = a;
    detail::smith_reduce(s, nullptr, nullptr);
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
    return d;
}

inline std::size_t rank(const IntMatrix& a) {
    std::size_t r = 0;
    for (auto& x : elementary_divisors(a))
        if (x != 0) ++r;
    return r;
}

class FinAbGroup {
public:
    FinAbGroup() = default;

    // Any list of cyclic orders is accepted: 0 means a copy of Z, 1 is
    // dropped, the rest are re-chained into invariant factors.
    static FinAbGroup from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders) {
        FinAbGroup g;
        g.free_rank_ = free_rank;
        std::vector<Integer> finite;
        for (auto& d : orders) {
            Integer a = abs(d);
            if (a == 0) ++g.free_rank_;
            else if (a != 1) finite.push_back(a);
        }
        // pairwise (gcd, lcm) sweep leaves a divisibility chain
        for (std::size_t i = 0; i < finite.size(); ++i)
            for (std::size_t j = i + 1; j < finite.size(); ++j) {
                Integer gg = gcd(finite[i], finite[j]);
                Integer ll = finite[i] / gg * finite[j];
                finite[i] = gg;
                finite[j] = ll;
            }
        for (auto& d : finite)
            if (d != 1) g.factors_.push_back(d);
        return g;
    }

    static FinAbGroup free(std::size_t r) { return from_cyclic_orders(r, {}); }
    static FinAbGroup cyclic(const Integer& n) { return from_cyclic_orders(0, {n}); }
    static FinAbGroup trivial() { return FinAbGroup{}; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    // Order of the torsion subgroup.
    Integer torsion_order() const {
        Integer o = 1;
        for (auto& d : factors_) o *= d;
        return o;
    }

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
    }
    friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

    // "Z^2 + Z/2 + Z/12"; the trivial group prints as "0".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << 'Z';
            if (free_rank_ > 1) os << '^' << free_rank_;
            first = false;
        }
        for (auto& d : factors_) {
            os << (first ? "" : " + ") << "Z/" << d;
            first = false;
        }
        if (first) os << '0';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) { return os << g.to_string(); }

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> factors_;
};

// Z^rows modulo the span of the columns of a.
inline FinAbGroup cokernel(const IntMatrix& a) {
    auto d = elementary_divisors(a);
    std::size_t r = 0;
    std::vector<Integer> finite;
    for (auto& x : d)
        if (x != 0) {
            ++r;
            finite.push_back(x);
        }
    return FinAbGroup::from_cyclic_orders(a.rows() - r, std::move(finite));
}

inline FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h) {
    std::vector<Integer> orders = g.invariant_factors();
    orders.insert(orders.end(), h.invariant_factors().begin(), h.invariant_factors().end());
    return FinAbGroup::from_cyclic_orders(g.free_rank() + h.free_rank(), std::move(orders));
}

inline FinAbGroup torsion_part(const FinAbGroup& g) {
    return FinAbGroup::from_cyclic_orders(0, g.invariant_factors());
}

}  // namespace duval
