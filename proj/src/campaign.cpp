#include "msum/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "msum/classification.hpp"
#include "msum/cyclotomic.hpp"
#include "msum/errors.hpp"
#include "msum/known_values.hpp"
#include "msum/prime_power.hpp"

namespace msum {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(Int x) { return std::to_string(x); }

std::string eq(const char* what, Int x) { return std::string(what) + "=" + str(x); }

void absorb(VerificationReport& report, ShardResult&& shard) {
    report.checks += shard.checks;
    std::move(shard.violations.begin(), shard.violations.end(),
              std::back_inserter(report.violations));
    std::move(shard.notes.begin(), shard.notes.end(), std::back_inserter(report.notes));
}

// Units q with q_lo <= q < min(q_end, e).
template <typename Fn>
void for_units(const ModulusTable& t, Int q_lo, Int q_end, Fn&& fn) {
    for (Int q = q_lo; q < q_end && q < t.modulus; ++q) {
        if (t.is_unit(q)) fn(q);
    }
}

VerificationReport theorem1(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(1000);
    VerificationReport report;
    report.domain = "coprime (q, e), 0 <= q < e <= " + str(e_max);
    report.params = {{"e_max", e_max}};

    auto shard = sweep.run(1, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 0, e, [&](Int q) {
            ++out.checks;
            const Int n = t.order[q];
            const Int bound = (e + n - 1) / n;
            if (t.m[q] > bound) {
                out.violations.push_back({q, e, "m <= " + str(bound), eq("m", t.m[q])});
            } else if (t.m[q] == bound && q > 1) {
                out.equality_cases.emplace_back(q, e);
            }
        });
    });
    std::set<std::pair<Int, Int>> equal(shard.equality_cases.begin(), shard.equality_cases.end());
    report.equality_cases = std::move(shard.equality_cases);
    absorb(report, std::move(shard));

    // q odd, e = 2(q - 1): the bound is attained.
    for (Int q = 3; 2 * (q - 1) <= e_max; q += 2) {
        ++report.checks;
        if (!equal.count({q, 2 * (q - 1)})) {
            report.add_violation(q, 2 * (q - 1), "m = ceil(e/n)", "strict inequality");
        }
    }
    report.notes.push_back(str(report.equality_cases->size()) + " pairs with 1 < q < e attain the bound");
    return report;
}

VerificationReport divisibility(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(1000);
    VerificationReport report;
    report.domain = "coprime (q, e), 0 <= q < e <= " + str(e_max);
    report.params = {{"e_max", e_max}};

    auto shard = sweep.run(1, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        Int equal_e1 = 0;
        for_units(t, 0, e, [&](Int q) {
            out.checks += 3;
            const Int mv = t.m[q];
            const Int e1 = std::gcd(e, (q + e - 1) % e);
            if (mv % e1 != 0) {
                out.violations.push_back({q, e, "e1=" + str(e1) + " divides m", eq("m", mv)});
            }
            if ((mv == e) != (q % e == 1 % e)) {
                out.violations.push_back({q, e, "m = e iff q = 1 (mod e)", eq("m", mv)});
            }
            if ((mv == 1) != (e == 1)) {
                out.violations.push_back({q, e, "m = 1 iff e = 1", eq("m", mv)});
            }
            if (mv == e1) ++equal_e1;
        });
        if (equal_e1 > 0) out.equality_cases.emplace_back(equal_e1, e);
    });
    Int equal_e1 = 0;
    for (auto [count, e] : shard.equality_cases) equal_e1 += count;
    shard.equality_cases.clear();
    absorb(report, std::move(shard));
    report.notes.push_back(str(equal_e1) + " of " + str(report.checks / 3) + " pairs have m = e1");
    return report;
}

VerificationReport basics(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(300);
    VerificationReport report;
    report.domain = "coprime (q, e), e <= " + str(e_max);
    report.params = {{"e_max", e_max}};

    auto shard = sweep.run(1, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 0, e, [&](Int q) {
            const Int mv = t.m[q];
            const auto inst = PowerSumInstance::make(q, e);
            ++out.checks;
            if (is_m_two(inst) != (mv == 2)) {
                out.violations.push_back({q, e, std::string("m = 2 criterion ") +
                                                     (is_m_two(inst) ? "holds" : "fails"),
                                          eq("m", mv)});
            }
            // <q^i> is contained in <q>, so m can only grow.
            Int x = q % e;
            for (Int i = 1; i <= t.order[q]; ++i, x = mul_mod(x, q, e)) {
                ++out.checks;
                if (t.m[x] < mv) {
                    out.violations.push_back({q, e, "m(q^" + str(i) + ", e) >= " + str(mv),
                                              eq("m", t.m[x])});
                }
            }
        });
    });
    absorb(report, std::move(shard));
    return report;
}

VerificationReport growth(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(300);
    VerificationReport report;
    report.domain = "subgroups mod e <= " + str(e_max) + ", levels before 0 appears";
    report.params = {{"e_max", e_max}};

    auto shard = sweep.run(1, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 0, e, [&](Int q) {
            if (t.key[q] != q && e > 1) return;
            const auto levels = LevelSets::grow(unit_subgroup(q, e));
            const Int n = t.order[q];
            if (levels.zero_level() != t.m[q]) {
                out.violations.push_back({q, e, eq("m", t.m[q]),
                                          eq("zero level", levels.zero_level())});
            }
            for (std::size_t level = 1; level < levels.zero_level(); ++level) {
                ++out.checks;
                if (levels.size(level) < level * n) {
                    out.violations.push_back({q, e, "|A_" + str(level) + "| >= " + str(level * n),
                                              str(levels.size(level))});
                }
            }
        });
    });
    absorb(report, std::move(shard));
    return report;
}

VerificationReport lemma3(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(1000);
    VerificationReport report;
    report.domain = "coprime 1 < q < e <= " + str(e_max) + " with e < e1^2 + 2 e1";
    report.params = {{"e_max", e_max}};
    auto shard = sweep.run(3, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 2, e, [&](Int q) {
            const auto inst = PowerSumInstance::make(q, e);
            if (!lemma3_applies(inst)) return;
            ++out.checks;
            if (t.m[q] != inst.e1) {
                out.violations.push_back({q, e, eq("m = e1", inst.e1), eq("m", t.m[q])});
            }
        });
    });
    absorb(report, std::move(shard));
    return report;
}

VerificationReport prop2(const ClaimParams& p, const Sweep& sweep) {
    return verify_prop2(p.r.value_or(6), p.e_min.value_or(1224), p.e_max.value_or(2000), sweep);
}

VerificationReport corollary8(const ClaimParams& p, const Sweep& sweep) {
    return verify_corollary8(p.e_max.value_or(1224), sweep);
}

VerificationReport conjecture4(const ClaimParams& p, const Sweep& sweep) {
    const Int e_max = p.e_max.value_or(600);
    VerificationReport report;
    report.domain = "coprime 1 < q < e <= " + str(e_max);
    report.params = {{"e_max", e_max}};
    auto shard = sweep.run(3, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 2, e, [&](Int q) {
            ++out.checks;
            const auto inst = PowerSumInstance::make(q, e);
            const auto c = conjecture4_check(inst, t.m[q]);
            if (!c.holds) {
                out.violations.push_back({q, e, "m <= " + str(c.k_min * inst.e1) + " (k=" +
                                                     str(c.k_min) + ")",
                                          eq("m", t.m[q])});
            }
        });
    });
    absorb(report, std::move(shard));
    return report;
}

VerificationReport two_power(const ClaimParams& p, const Sweep& sweep) {
    const unsigned k_max = p.k_cap.value_or(12);
    VerificationReport report;
    report.domain = "odd q < 2^k, k <= " + str(k_max);
    report.params = {{"k_max", k_max}};
    const auto results = sweep.map<ShardResult>(k_max + 1, [](std::size_t k) {
        ShardResult out;
        const Int e = Int{1} << k;
        const auto t = modulus_table(e);
        for (Int q = 1; q < e; q += 2) {
            ++out.checks;
            const Int closed = two_power_m(q, static_cast<unsigned>(k));
            if (closed != t.m[q]) {
                out.violations.push_back({q, e, eq("m", closed), eq("m", t.m[q])});
            }
        }
        return out;
    });
    for (auto r : results) absorb(report, std::move(r));
    return report;
}

VerificationReport prop9(const ClaimParams& p, const Sweep& sweep) {
    const Int p_max = p.p_max.value_or(50);
    const Int q_max = p.q_max.value_or(50);
    const Int modulus_max = p.e_max.value_or(100'000);
    VerificationReport report;
    report.domain = "odd primes p <= " + str(p_max) + ", p not dividing q <= " + str(q_max) +
                    ", p^k <= " + str(modulus_max) + ", p | ord";
    report.params = {{"p_max", p_max}, {"q_max", q_max}, {"e_max", modulus_max}};

    std::vector<std::pair<Int, Int>> jobs;
    for (Int prime : primes_up_to(p_max)) {
        if (prime == 2) continue;
        for (Int q = 1; q <= q_max; ++q) {
            if (q % prime != 0) jobs.emplace_back(prime, q);
        }
    }
    const auto results = sweep.map<ShardResult>(jobs.size(), [&](std::size_t j) {
        ShardResult out;
        const auto [prime, q] = jobs[j];
        for (unsigned k = 2; checked_pow(prime, k) <= modulus_max; ++k) {
            if (ord_factorization(q, prime, k).i == 0) continue;
            ++out.checks;
            if (!check_prop9(q, prime, k)) {
                out.violations.push_back({q, checked_pow(prime, k),
                                          "order drop and equal m at p^" + str(k - 1),
                                          "mismatch"});
            }
        }
        return out;
    });
    for (auto r : results) absorb(report, std::move(r));
    return report;
}

VerificationReport prime_power(const ClaimParams& p, const Sweep& sweep) {
    const Int p_max = p.p_max.value_or(50);
    const Int q_max = p.q_max.value_or(30);
    const Int modulus_max = p.e_max.value_or(100'000);
    VerificationReport report;
    report.domain = "fixed-base towers, odd p <= " + str(p_max) + ", q <= " + str(q_max) +
                    ", p^k <= " + str(modulus_max);
    report.params = {{"p_max", p_max}, {"q_max", q_max}, {"e_max", modulus_max}};

    // The sequence stated for 9 mod powers of 11.
    {
        const auto t = fixed_base_tower(9, 11, 4);
        const std::vector<Int> expected{3, 5, 5, 5};
        ++report.checks;
        if (t.m_values() != expected) {
            report.add_violation(9, 11, "m(9, 11^k) = " + render_tuple(expected),
                                 render_tuple(t.m_values()));
        }
    }

    std::vector<std::pair<Int, Int>> jobs;
    for (Int prime : primes_up_to(p_max)) {
        if (prime == 2) continue;
        for (Int q = 2; q <= q_max; ++q) {
            if (q % prime != 0) jobs.emplace_back(prime, q);
        }
    }
    const auto results = sweep.map<ShardResult>(jobs.size(), [&](std::size_t j) {
        ShardResult out;
        const auto [prime, q] = jobs[j];
        unsigned k_max = 1;
        while (checked_pow(prime, k_max + 1) <= modulus_max) ++k_max;
        const auto tower = fixed_base_tower(q, prime, k_max);
        const auto& entries = tower.entries;
        auto fail = [&](Int modulus, std::string expected, std::string actual) {
            out.violations.push_back({q, modulus, std::move(expected), std::move(actual)});
        };
        const Int r = tower.n > 1 ? smallest_prime_divisor(tower.n) : 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& entry = entries[i];
            const unsigned k = entry.k;
            out.checks += 6;
            const Int direct = m(q, entry.modulus).value;
            if (direct != entry.m) fail(entry.modulus, eq("m", direct), eq("tower m", entry.m));
            const Int expected_ord =
                k <= tower.w ? tower.n : tower.n * checked_pow(prime, k - tower.w);
            if (entry.ord != expected_ord) {
                fail(entry.modulus, eq("ord", expected_ord), eq("ord", entry.ord));
            }
            if (i > 0 && entry.m < entries[i - 1].m) {
                fail(entry.modulus, "m >= " + str(entries[i - 1].m), eq("m", entry.m));
            }
            if (k > tower.w && entry.m != entries[tower.w - 1].m) {
                fail(entry.modulus, "m constant from level w=" + str(tower.w), eq("m", entry.m));
            }
            if (r != 0 && k >= tower.w && entry.m > r) {
                fail(entry.modulus, "m <= " + str(r), eq("m", entry.m));
            }
            if ((entry.m == 2) != (entry.ord % 2 == 0)) {
                fail(entry.modulus, "m = 2 iff ord even", eq("m", entry.m) + " " + eq("ord", entry.ord));
            }
            if (entry.ord > 1 && smallest_prime_divisor(entry.ord) == 3 && prime > 3 && entry.m != 3) {
                fail(entry.modulus, "m = 3", eq("m", entry.m));
            }
        }
        // m(q, p^(j+k)) <= m(q, p^j) m(q, p^k)
        for (std::size_t a = 0; a < entries.size(); ++a) {
            for (std::size_t b = a; a + b + 1 < entries.size(); ++b) {
                ++out.checks;
                const auto& joint = entries[a + b + 1];
                const Int bound = entries[a].m * entries[b].m;
                if (joint.m > bound) fail(joint.modulus, "m <= " + str(bound), eq("m", joint.m));
            }
        }
        return out;
    });
    for (auto r : results) absorb(report, std::move(r));

    // m mod p^k depends only on the order: one cyclic subgroup per order.
    for (Int prime : primes_up_to(std::min<Int>(p_max, 50))) {
        if (prime == 2) continue;
        for (unsigned k = 1; checked_pow(prime, k) <= std::min<Int>(modulus_max, 3000); ++k) {
            const auto t = modulus_table(checked_pow(prime, k));
            std::map<Int, Int> by_order;
            for (Int q = 1; q < t.modulus; ++q) {
                if (!t.is_unit(q)) continue;
                ++report.checks;
                auto [it, fresh] = by_order.emplace(t.order[q], t.m[q]);
                if (!fresh && it->second != t.m[q]) {
                    report.add_violation(q, t.modulus, "m=" + str(it->second) + " for order " +
                                                           str(t.order[q]),
                                         eq("m", t.m[q]));
                }
            }
        }
    }
    return report;
}

VerificationReport prop10(const ClaimParams& p, const Sweep& sweep) {
    const Int p_max = p.p_max.value_or(43);
    const unsigned k_cap = p.k_cap.value_or(6);
    VerificationReport report;
    report.domain = "odd primes p <= " + str(p_max) + ", 1 != n | p - 1, K <= " + str(k_cap);
    report.params = {{"p_max", p_max}, {"k_cap", k_cap}};
    std::vector<std::pair<Int, Int>> jobs;
    for (Int prime : primes_up_to(p_max)) {
        if (prime == 2) continue;
        for (Int n : divisors(prime - 1)) {
            if (n > 1) jobs.emplace_back(prime, n);
        }
    }
    const auto results = sweep.map<ShardResult>(jobs.size(), [&](std::size_t j) {
        ShardResult out;
        const auto [prime, n] = jobs[j];
        const auto hit = prop10_search(prime, n, k_cap);
        ++out.checks;
        const Int modulus = checked_pow(prime, hit.K);
        if (mul_order(hit.Q, modulus) != n || m(hit.Q, modulus).value != smallest_prime_divisor(n)) {
            out.violations.push_back({hit.Q, modulus, "order n with m = r", "mismatch"});
        }
        if (hit.K > 1) {
            out.notes.push_back("p=" + str(prime) + " n=" + str(n) + ": K=" + str(hit.K));
        }
        return out;
    });
    for (auto r : results) absorb(report, std::move(r));
    return report;
}

VerificationReport order_table(const std::string& claim, Int n, Int p_max, unsigned k_cap,
                               const std::vector<known::PrimeException>& exceptions) {
    VerificationReport report;
    report.domain = "primes p = 1 (mod " + str(n) + "), p <= " + str(p_max) +
                    ", k up to stabilization (cap " + str(k_cap) + ")";
    report.params = {{"n", n}, {"p_max", p_max}, {"k_cap", k_cap}};
    const auto rows = prime_order_table(n, p_max, k_cap, exceptions);
    const Int r = smallest_prime_divisor(n);
    std::map<Int, bool> reached;
    for (const auto& row : rows) {
        ++report.checks;
        const Int modulus = checked_pow(row.p, row.k);
        if (row.m != row.expected) {
            report.add_violation(element_of_order(row.p, row.k, n), modulus,
                                 eq("m", row.expected) + " at p=" + str(row.p) + " k=" + str(row.k),
                                 eq("m", row.m));
        }
        if (row.m == r) reached[row.p] = true;
    }
    for (const auto& row : rows) {
        if (!reached[row.p]) {
            report.add_violation(0, row.p, "m reaches " + str(r) + " within k_cap",
                                 "still below at k=" + str(row.k));
            reached[row.p] = true;
        }
    }
    for (const auto& x : exceptions) {
        if (x.p > p_max) continue;
        ++report.checks;
        const bool present = std::any_of(rows.begin(), rows.end(),
                                         [&](const auto& row) { return row.p == x.p && row.k == 1; });
        if (!present) report.add_violation(0, x.p, "row for listed prime", "absent");
    }
    report.notes.push_back(str(rows.size()) + " rows");
    (void)claim;
    return report;
}

VerificationReport prop14(const ClaimParams& p, const Sweep&) {
    return order_table("prop14", 5, p.p_max.value_or(1000), p.k_cap.value_or(6),
                       known::kOrderFiveExceptions);
}

VerificationReport prop15(const ClaimParams& p, const Sweep&) {
    return order_table("prop15", 7, p.p_max.value_or(2689), p.k_cap.value_or(6),
                       known::kOrderSevenExceptions);
}

ShardResult check_tower(const known::TowerRow& row, bool prefix_only) {
    ShardResult out;
    ++out.checks;
    const auto levels = static_cast<unsigned>(row.sequence.size());
    const auto tower = tower_sequence(row.p, row.n, levels, !prefix_only);
    auto got = tower.sequence();
    if (prefix_only && got.size() > levels) got.resize(levels);
    if (got != row.sequence) {
        out.violations.push_back({0, row.p, "n=" + str(row.n) + " " + render_tuple(row.sequence),
                                  render_tuple(got)});
    }
    for (const auto& note : tower.notes) {
        out.notes.push_back("p=" + str(row.p) + " n=" + str(row.n) + ": " + note);
    }
    return out;
}

VerificationReport tower_rows(const std::vector<const known::TowerRow*>& rows,
                              const std::vector<bool>& prefix, const Sweep& sweep) {
    VerificationReport report;
    const auto results = sweep.map<ShardResult>(
        rows.size(), [&](std::size_t i) { return check_tower(*rows[i], prefix[i]); });
    for (auto r : results) absorb(report, std::move(r));
    return report;
}

VerificationReport example16(const ClaimParams&, const Sweep& sweep) {
    std::vector<const known::TowerRow*> rows;
    for (const auto& row : known::kPrimeOrderTowers) rows.push_back(&row);
    auto report = tower_rows(rows, std::vector<bool>(rows.size(), false), sweep);
    report.domain = "prime-order towers n in {11, 13, 17, 19}";
    return report;
}

VerificationReport example17(const ClaimParams&, const Sweep& sweep) {
    std::vector<const known::TowerRow*> rows;
    std::vector<bool> prefix;
    for (const auto& row : known::kCompositeOrderTowers) {
        rows.push_back(&row);
        prefix.push_back(false);
    }
    for (const auto& row : known::kSmallestPrimeFiveTowers) {
        rows.push_back(&row);
        prefix.push_back(true);
    }
    auto report = tower_rows(rows, prefix, sweep);
    report.domain = "composite-order towers";
    return report;
}

const std::map<Int, std::vector<ExceptionEntry>>& listed_exceptions() {
    static const auto table = [] {
        std::map<Int, std::vector<ExceptionEntry>> t;
        for (const auto& x : known::kOrderFiveExceptions) t[5].push_back({x.p, 1, x.m});
        for (const auto& x : known::kOrderSevenExceptions) t[7].push_back({x.p, 1, x.m});
        for (auto& [n, v] : t) std::sort(v.begin(), v.end());
        return t;
    }();
    return table;
}

VerificationReport corollary13(const ClaimParams& p, const Sweep&) {
    std::vector<Int> orders;
    if (p.n) {
        orders.push_back(*p.n);
    } else {
        orders = {5, 7};
    }
    const unsigned k_cap = p.k_cap.value_or(4);
    VerificationReport report;
    report.domain = "order-n subgroups mod p^k with m below n/(n - phi(n))";
    report.params = {{"n", orders}, {"k_cap", k_cap}};
    for (Int n : orders) {
        const auto set = corollary13_exceptions(n, k_cap);
        for (const auto& entry : set.entries) {
            ++report.checks;
            const Int modulus = checked_pow(entry.p, entry.k);
            const Int q = element_of_order(entry.p, entry.k, n);
            if (mul_order(q, modulus) != n || m(q, modulus).value != entry.m ||
                !set.limit.greater_than(entry.m)) {
                report.add_violation(q, modulus, "verified member", "failed recheck");
            }
        }
        auto it = listed_exceptions().find(n);
        if (it != listed_exceptions().end()) {
            ++report.checks;
            if (set.entries != it->second) {
                std::string got;
                for (const auto& e : set.entries) {
                    got += "(" + str(e.p) + "," + str(e.k) + "," + str(e.m) + ")";
                }
                report.add_violation(0, n, "listed exceptions for n=" + str(n),
                                     got.empty() ? "none" : got);
            }
            ++report.checks;
            if (!set.complete()) {
                report.add_violation(0, n, "fully sifted candidates",
                                     str(set.unresolved.size()) + " unresolved");
            }
        }
        report.notes.push_back("n=" + str(n) + ": " + str(set.entries.size()) + " entries from " +
                               str(set.candidate_pool.size()) + " denominators, " +
                               (set.complete() ? "complete" : "candidates, verified members"));
    }
    return report;
}

VerificationReport prop11(const ClaimParams& p, const Sweep& sweep) {
    std::vector<Int> orders;
    if (p.n) {
        orders.push_back(*p.n);
    } else {
        orders = {5, 7, 11, 13};
    }
    const Int e_max = p.e_max.value_or(3000);
    VerificationReport report;
    report.domain = "e <= " + str(e_max) + ", e | Phi_n(q), m(q, e) below n/(n - phi(n))";
    report.params = {{"n", orders}, {"e_max", e_max}};
    for (Int n : orders) {
        const auto candidates = prop11_candidates(n);
        const auto phi = cyclotomic(n);
        auto shard = sweep.run(2, e_max, [&](const ModulusTable& t, ShardResult& out) {
            const Int e = t.modulus;
            for_units(t, 1, e, [&](Int q) {
                if (phi.evaluate_mod(q, e) != 0) return;
                if (!candidates.limit.greater_than(t.m[q])) return;
                ++out.checks;
                if (!candidates.contains(e)) {
                    out.violations.push_back({q, e, "e divides a denominator for n=" + str(n),
                                              eq("m", t.m[q])});
                }
            });
        });
        absorb(report, std::move(shard));
    }
    return report;
}

VerificationReport remark12(const ClaimParams& p, const Sweep&) {
    const Int n_max = p.e_max.value_or(10'000);
    VerificationReport report;
    report.domain = "2 <= n <= " + str(n_max);
    report.params = {{"e_max", n_max}};
    for (Int n = 2; n <= n_max; ++n) {
        const Fraction t = threshold(n);
        const Int r = smallest_prime_divisor(n);
        report.checks += 2;
        if (t != threshold(rad(n))) {
            report.add_violation(0, n, "threshold(rad n)=" + threshold(rad(n)).to_string(),
                                 t.to_string());
        }
        if (t.greater_than(r)) report.add_violation(0, n, "threshold <= " + str(r), t.to_string());
        if (rad(n) == r) {
            ++report.checks;
            if (!t.greater_than(r - 1)) {
                report.add_violation(0, n, "threshold > " + str(r - 1), t.to_string());
            }
        }
    }
    return report;
}

using ClaimFn = VerificationReport (*)(const ClaimParams&, const Sweep&);

struct ClaimEntry {
    ClaimInfo info;
    ClaimFn fn;
};

const std::vector<ClaimEntry>& registry() {
    static const std::vector<ClaimEntry> list{
        {{"theorem1", "m <= ceil(e/n) and its equality cases"}, theorem1},
        {{"divisibility", "e1 | m, m = e iff q = 1, m = 1 iff e = 1"}, divisibility},
        {{"basics", "m = 2 criterion and monotonicity under powers of q"}, basics},
        {{"growth", "level sets satisfy |A_t| >= t n before 0 appears"}, growth},
        {{"lemma3", "m = e1 when e < e1^2 + 2 e1"}, lemma3},
        {{"prop2", "(a, b) parametrization of pairs with m >= e/r"}, prop2},
        {{"corollary8", "classification of pairs with m >= e/6"}, corollary8},
        {{"conjecture4", "m <= k e1 whenever e < (e1 + 1)^(k+1) - 1"}, conjecture4},
        {{"two_power", "closed form of m mod 2^k"}, two_power},
        {{"prop9", "order drop and equal m one level down"}, prop9},
        {{"prime_power", "fixed-base towers: monotone, stable from w, bounded by r"}, prime_power},
        {{"prop10", "every tower reaches r within the level cap"}, prop10},
        {{"prop11", "small-m moduli dividing Phi_n(q) divide a Bezout denominator"}, prop11},
        {{"prop14", "order-5 subgroups mod p^k"}, prop14},
        {{"prop15", "order-7 subgroups mod p^k"}, prop15},
        {{"example16", "prime-order tower sequences"}, example16},
        {{"example17", "composite-order tower sequences"}, example17},
        {{"corollary13", "exception sets sifted from Bezout denominators"}, corollary13},
        {{"remark12", "threshold n/(n - phi(n)) properties"}, remark12},
    };
    return list;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
    static const auto list = [] {
        std::vector<ClaimInfo> out;
        for (const auto& entry : registry()) out.push_back(entry.info);
        return out;
    }();
    return list;
}

VerificationReport run_claim(const std::string& claim_id, const ClaimParams& params) {
    const auto& list = registry();
    auto it = std::find_if(list.begin(), list.end(),
                           [&](const ClaimEntry& c) { return c.info.id == claim_id; });
    if (it == list.end()) throw UnknownClaim("unknown claim '" + claim_id + "'");
    const auto start = Clock::now();
    const Sweep sweep(SweepOptions{params.jobs, params.store});
    auto report = it->fn(params, sweep);
    report.claim_id = claim_id;
    report.elapsed = Clock::now() - start;
    return report;
}

std::vector<std::pair<Int, Int>> theorem1_tightness_scan(Int e_max, const Sweep& sweep) {
    auto shard = sweep.run(3, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for_units(t, 2, e, [&](Int q) {
            const Int n = t.order[q];
            if (t.m[q] == (e + n - 1) / n) out.equality_cases.emplace_back(q, e);
        });
    });
    return shard.equality_cases;
}

}  // namespace msum
