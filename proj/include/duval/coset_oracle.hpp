#pragma once

// Brute-force oracle: the order of coker(A) (x) Z/m found by enumerating the
// span of the columns of A inside (Z/m)^rows. Independent of Smith form.

#include "abelian_lattice.hpp"

#include <cstdint>
#include <queue>
#include <vector>

namespace duval::oracle {

inline std::uint64_t encode(const std::vector<long>& v, long m) {
    std::uint64_t code = 0;
    for (long x : v) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(x);
    return code;
}

// |(Z/m)^r / <columns mod m>|; needs m^r to fit in memory.
inline std::uint64_t quotient_order_mod(const std::vector<std::vector<long>>& columns, std::size_t rows, long m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rows; ++i) total *= static_cast<std::uint64_t>(m);
    std::vector<char> seen(total, 0);
    std::vector<long> zero(rows, 0);
    std::queue<std::vector<long>> todo;
    todo.push(zero);
    seen[encode(zero, m)] = 1;
    std::uint64_t span = 1;
    while (!todo.empty()) {
        auto v = todo.front();
        todo.pop();
        for (auto& c : columns) {
            std::vector<long> w(rows);
            for (std::size_t i = 0; i < rows; ++i) w[i] = (((v[i] + c[i]) % m) + m) % m;
            auto code = encode(w, m);
            if (!seen[code]) {
                seen[code] = 1;
                ++span;
                todo.push(w);
            }
        }
    }
    return total / span;
}

// The same count predicted from a canonical group: m^rank * prod gcd(m, d).
inline std::uint64_t predicted_order_mod(const FinAbGroup& g, long m) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < g.free_rank(); ++i) r *= static_cast<std::uint64_t>(m);
    for (auto& d : g.invariant_factors()) {
        Integer q = gcd(d, Integer(m));
        r *= q.get_ui();
    }
    return r;
}

}  // namespace duval::oracle
