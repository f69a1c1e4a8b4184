#include "msum/prime_power.hpp"

#include <numeric>
#include <stdexcept>

namespace msum {

namespace {

void require_odd_prime(Int p, const char* who) {
    if (p < 3 || !is_prime(p)) {
        throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
    }
}

// p^k when it stays within the tower cap, otherwise nullopt.
std::optional<Int> capped_power(Int p, unsigned k) {
    Int pk = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (pk > kTowerModulusCap / p) return std::nullopt;
        pk *= p;
    }
    return pk;
}

}  // namespace

OrderFactorization ord_factorization(Int q, Int p, unsigned k) {
    require_odd_prime(p, "ord_factorization");
    if (q % p == 0) throw DomainError("ord_factorization: p divides q");
    Int ord = mul_order(q, checked_pow(p, k));
    OrderFactorization f;
    while (ord % p == 0) {
        ord /= p;
        ++f.i;
    }
    f.d = ord;
    if ((p - 1) % f.d != 0) throw std::logic_error("ord_factorization: d does not divide p - 1");
    return f;
}

bool check_prop9(Int q, Int p, unsigned k) {
    const auto f = ord_factorization(q, p, k);
    if (f.i == 0 || k < 2) {
        throw DomainError("check_prop9: needs p | ord_{p^k}(q) and k >= 2");
    }
    const Int upper = checked_pow(p, k);
    const Int lower = upper / p;
    const Int expected_ord = checked_pow(p, f.i - 1) * f.d;
    return mul_order(q, lower) == expected_ord && m(q, upper).value == m(q, lower).value;
}

std::vector<Int> FixedBaseTower::m_values() const {
    std::vector<Int> out;
    for (const auto& e : entries) out.push_back(e.m);
    return out;
}

FixedBaseTower fixed_base_tower(Int q, Int p, unsigned k_max) {
    require_odd_prime(p, "fixed_base_tower");
    if (q % p == 0) throw DomainError("fixed_base_tower: p divides q");
    if (q == 1) throw DomainError("fixed_base_tower: q = 1 never stabilizes");
    FixedBaseTower t;
    t.q = q;
    t.p = p;
    t.n = mul_order(q, p);
    t.w = p_adic_w(q, t.n, p);
    for (unsigned k = 1; k <= k_max; ++k) {
        FixedBaseEntry entry;
        entry.k = k;
        entry.modulus = checked_pow(p, k);
        entry.ord = mul_order(q, entry.modulus);
        entry.factors = ord_factorization(q, p, k);
        if (t.n == 1) {
            entry.m = std::gcd(entry.modulus, q - 1);
            entry.closed_form = true;
        } else {
            entry.m = m(q, entry.modulus).value;
        }
        t.entries.push_back(entry);
    }
    return t;
}

std::vector<Int> TowerReport::sequence() const {
    std::vector<Int> out;
    for (const auto& l : levels) out.push_back(l.m);
    return out;
}

TowerReport tower_sequence(Int p, Int n, unsigned k_max, bool stop_at_limit) {
    require_odd_prime(p, "tower_sequence");
    if (n <= 1 || (p - 1) % n != 0) {
        throw DomainError("tower_sequence: need 1 != n | p - 1");
    }
    TowerReport report;
    report.p = p;
    report.n = n;
    report.r = smallest_prime_divisor(n);
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto modulus = capped_power(p, k);
        if (!modulus) {
            report.notes.push_back("stopped before k=" + std::to_string(k) +
                                   ": modulus exceeds the tower cap");
            break;
        }
        TowerLevel level;
        level.k = k;
        level.modulus = *modulus;
        level.generator = element_of_order(p, k, n);
        level.ord = mul_order(level.generator, level.modulus);
        if (level.ord != n) throw std::logic_error("tower_sequence: generator has wrong order");
        level.m = m(level.generator, level.modulus).value;
        try {
            level.w = p_adic_w(level.generator, n, p);
        } catch (const std::overflow_error&) {
            level.w.reset();
        }
        if (!report.levels.empty() && level.m < report.levels.back().m) {
            report.notes.push_back("interesting: m decreases at k=" + std::to_string(k));
        }
        report.levels.push_back(level);
        if (level.m == report.r && !report.k_hit) {
            report.k_hit = k;
            if (stop_at_limit) break;
        }
    }
    if (!report.levels.empty()) report.limit = report.levels.back().m;
    return report;
}

Prop10Hit prop10_search(Int p, Int n, unsigned k_cap) {
    const auto tower = tower_sequence(p, n, k_cap, true);
    if (!tower.k_hit) {
        throw NotFoundWithinCap("prop10_search: no level k <= " + std::to_string(k_cap) +
                                " with m = " + std::to_string(tower.r) + " for p=" +
                                std::to_string(p) + " n=" + std::to_string(n));
    }
    return {*tower.k_hit, tower.levels.back().generator};
}

std::vector<PrimePowerRow> prime_order_table(Int n, Int p_max, unsigned k_cap,
                                             const std::vector<known::PrimeException>& exceptions) {
    std::vector<PrimePowerRow> rows;
    const Int r = smallest_prime_divisor(n);
    for (Int p : primes_up_to(p_max)) {
        if (p < 3 || (p - 1) % n != 0) continue;
        const auto tower = tower_sequence(p, n, k_cap, true);
        for (const auto& level : tower.levels) {
            Int expected = r;
            if (level.k == 1) {
                for (const auto& x : exceptions) {
                    if (x.p == p) expected = x.m;
                }
            }
            rows.push_back({p, level.k, level.m, expected});
        }
    }
    return rows;
}

std::vector<PrimePowerRow> prop14_table(Int p_max, unsigned k_cap) {
    return prime_order_table(5, p_max, k_cap, known::kOrderFiveExceptions);
}

std::vector<PrimePowerRow> prop15_table(Int p_max, unsigned k_cap) {
    return prime_order_table(7, p_max, k_cap, known::kOrderSevenExceptions);
}

}  // namespace msum
