#pragma once

// Slow, obviously-correct reference computations. They share no code with the
// library beyond the integer type.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "msum/modular.hpp"

namespace oracle {

using msum::Int;

inline Int order(Int q, Int e) {
    if (e == 1) return 1;
    Int x = q % e;
    for (Int s = 1;; ++s) {
        if (x == 1) return s;
        x = x * q % e;
    }
}

inline std::vector<Int> powers(Int q, Int e) {
    std::vector<Int> out;
    Int x = 1 % e;
    do {
        out.push_back(x);
        x = x * q % e;
    } while (x != 1 % e);
    return out;
}

// m(q, e) by dynamic programming over (count, residue): reach[t] holds the
// residues that are sums of exactly t powers of q.
inline Int naive_m(Int q, Int e) {
    if (e == 1) return 1;
    const auto pw = powers(q % e, e);
    std::vector<char> reach(e, 0);
    for (Int x : pw) reach[x] = 1;
    for (Int t = 1; t <= e; ++t) {
        if (reach[0]) return t;
        std::vector<char> next(e, 0);
        for (Int r = 0; r < e; ++r) {
            if (!reach[r]) continue;
            for (Int x : pw) next[(r + x) % e] = 1;
        }
        reach.swap(next);
    }
    return 0;
}

inline std::map<Int, unsigned> factor(Int n) {
    std::map<Int, unsigned> out;
    for (Int d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

inline Int phi(Int n) {
    Int count = 0;
    for (Int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

// v_p(x) for x given as a product of small integers is awkward; for the test
// ranges q^n - 1 fits in 64 bits.
inline unsigned valuation(Int x, Int p) {
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline Int ipow(Int b, unsigned k) {
    Int out = 1;
    while (k--) out *= b;
    return out;
}

}  // namespace oracle
