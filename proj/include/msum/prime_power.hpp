#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msum/engine.hpp"
#include "msum/known_values.hpp"

namespace msum {

/// Towers stop before any level whose modulus p^k exceeds this.
inline constexpr Int kTowerModulusCap = 10'000'000'000'000ULL;

/// ord_{p^k}(q) = p^i * d with d | p - 1.
struct OrderFactorization {
    unsigned i = 0;
    Int d = 1;

    bool operator==(const OrderFactorization&) const = default;
};

OrderFactorization ord_factorization(Int q, Int p, unsigned k);

/// With ord_{p^k}(q) = p^i d and i > 0: ord_{p^(k-1)}(q) = p^(i-1) d and
/// m(q, p^k) = m(q, p^(k-1)), both recomputed from scratch. Throws DomainError
/// when i = 0 or k < 2.
bool check_prop9(Int q, Int p, unsigned k);

struct FixedBaseEntry {
    unsigned k = 0;
    Int modulus = 0;
    Int ord = 0;
    OrderFactorization factors;
    Int m = 0;
    bool closed_form = false;  ///< m = gcd(p^k, q - 1) for q = 1 (mod p)
};

/// m(q, p^k) for one base q and k = 1..k_max.
struct FixedBaseTower {
    Int q = 0;
    Int p = 0;
    Int n = 0;      ///< ord_p(q)
    unsigned w = 0; ///< v_p(q^n - 1)
    std::vector<FixedBaseEntry> entries;

    std::vector<Int> m_values() const;
};

FixedBaseTower fixed_base_tower(Int q, Int p, unsigned k_max);

struct TowerLevel {
    unsigned k = 0;
    Int modulus = 0;
    Int generator = 0;
    Int ord = 0;
    Int m = 0;
    std::optional<unsigned> w;  ///< v_p(Q^n - 1), when it fits the probe range
};

/// m at p, p^2, ... for the subgroup of order n, with a fresh order-n
/// generator at each level.
struct TowerReport {
    Int p = 0;
    Int n = 0;
    Int r = 0;  ///< smallest prime divisor of n
    std::vector<TowerLevel> levels;
    Int limit = 0;
    std::optional<unsigned> k_hit;  ///< first level with m = r
    std::vector<std::string> notes;

    std::vector<Int> sequence() const;
};

/// Requires p an odd prime and 1 != n | p - 1. With `stop_at_limit` the tower
/// ends at the first level where m reaches r.
TowerReport tower_sequence(Int p, Int n, unsigned k_max, bool stop_at_limit = false);

struct Prop10Hit {
    unsigned K = 0;
    Int Q = 0;
};

/// Least K <= k_cap with m = r for an order-n element mod p^K. Throws
/// NotFoundWithinCap when the cap (or the modulus cap) is reached first.
Prop10Hit prop10_search(Int p, Int n, unsigned k_cap);

struct PrimePowerRow {
    Int p = 0;
    unsigned k = 0;
    Int m = 0;
    Int expected = 0;
};

/// Rows (p, k, m) for every prime p <= p_max with n | p - 1, levels up to the
/// first k where m reaches n's smallest prime divisor (capped at k_cap).
/// `expected` is the listed exception value at k = 1, else that prime divisor.
std::vector<PrimePowerRow> prime_order_table(Int n, Int p_max, unsigned k_cap,
                                             const std::vector<known::PrimeException>& exceptions);

std::vector<PrimePowerRow> prop14_table(Int p_max, unsigned k_cap);
std::vector<PrimePowerRow> prop15_table(Int p_max, unsigned k_cap);

}  // namespace msum
