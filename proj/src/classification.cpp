#include "msum/classification.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "msum/known_values.hpp"

namespace msum {

const char* to_string(Corollary8Tag tag) {
    switch (tag) {
        case Corollary8Tag::i: return "i";
        case Corollary8Tag::ii: return "ii";
        case Corollary8Tag::iii: return "iii";
        case Corollary8Tag::iv: return "iv";
        case Corollary8Tag::v: return "v";
        case Corollary8Tag::vi: return "vi";
        case Corollary8Tag::vii: return "vii";
        case Corollary8Tag::viii: return "viii";
        case Corollary8Tag::ix: return "ix";
        case Corollary8Tag::x: return "x";
        case Corollary8Tag::none: return "none";
    }
    return "?";
}

namespace {

void require_proper(Int q, Int e, Int upper, const char* who) {
    if (!(q > 1 && q < upper)) {
        throw DomainError(std::string(who) + ": need 1 < q < " +
                          (upper == e ? std::string("e") : std::string("e-1")) +
                          ", got q=" + std::to_string(q) + " e=" + std::to_string(e));
    }
    if (std::gcd(q, e) != 1) {
        throw NotCoprime(std::string(who) + ": q=" + std::to_string(q) +
                         " and e=" + std::to_string(e) + " must be coprime");
    }
}

const known::ListedPair* find_listed(const std::vector<known::ListedPair>& list, Int q, Int e) {
    auto it = std::find_if(list.begin(), list.end(),
                           [&](const auto& p) { return p.e == e && p.q == q; });
    return it == list.end() ? nullptr : &*it;
}

// One parametric family: e * b = a * (q - 1), q >= q_min, and side conditions.
struct Family {
    Corollary8Tag tag;
    Int a;
    Int b;
    Int q_min;
    bool (*side)(Int q);
};

bool coprime_to(Int q, Int k) { return std::gcd(q, k) == 1; }

const std::vector<Family>& families() {
    static const std::vector<Family> list{
        {Corollary8Tag::ii, 3, 2, 7, [](Int q) { return coprime_to(q, 6); }},
        {Corollary8Tag::iii, 4, 3, 13, [](Int q) { return q % 6 == 1; }},
        {Corollary8Tag::iv, 5, 2, 7, [](Int q) { return coprime_to(q, 10); }},
        {Corollary8Tag::v, 5, 3, 7, [](Int q) { return coprime_to(q, 5) && q % 3 == 1; }},
        {Corollary8Tag::vi, 5, 4, 13, [](Int q) { return coprime_to(q, 5) && q % 4 == 1; }},
        {Corollary8Tag::vii, 6, 5, 16,
         [](Int q) { return coprime_to(q, 6) && q % 5 == 1; }},
    };
    return list;
}

}  // namespace

bool lemma3_applies(const PowerSumInstance& inst) {
    if (!(inst.q > 1 && inst.q < inst.e)) {
        throw DomainError("lemma3_applies: need 1 < q < e");
    }
    return inst.e < inst.e1 * inst.e1 + 2 * inst.e1;
}

std::optional<StarParams> star_params(Int q, Int e, Int r) {
    require_proper(q, e, e, "star_params");
    const Int e1 = std::gcd(e, q - 1);
    const StarParams sp{e / e1, (q - 1) / e1};
    const bool ok = std::gcd(sp.a, sp.b) == 1 && sp.b < sp.a && sp.a <= r && sp.a * sp.b <= q &&
                    e * sp.b == sp.a * (q - 1);
    if (!ok) return std::nullopt;
    return sp;
}

Corollary8Case classify_large(Int q, Int e) {
    require_proper(q, e, e - 1, "classify_large");
    std::vector<Corollary8Case> matches;

    if (auto p = find_listed(known::kLargeMTwo, q, e)) {
        matches.push_back({Corollary8Tag::viii, std::nullopt, p->m, {}});
    }
    if (find_listed(known::kLargeMOrderTwo, q, e)) {
        matches.push_back({Corollary8Tag::ix, std::nullopt, 2 * std::gcd(e, q - 1), {}});
    }
    if (auto p = find_listed(known::kLargeMSporadic, q, e)) {
        matches.push_back({Corollary8Tag::x, std::nullopt, p->m, {}});
    }

    for (Int a = 2; a <= 6; ++a) {
        if (q >= a + 1 && std::gcd(a, q) == 1 && e == a * (q - 1)) {
            matches.push_back({Corollary8Tag::i, StarParams{a, 1}, q - 1, {}});
        }
    }
    for (const auto& f : families()) {
        if (q >= f.q_min && f.side(q) && e * f.b == f.a * (q - 1)) {
            matches.push_back({f.tag, StarParams{f.a, f.b}, e / f.a, {}});
        }
    }

    if (matches.empty()) return {};
    Corollary8Case result = matches.front();
    for (std::size_t i = 1; i < matches.size(); ++i) {
        if (matches[i].m_predicted != result.m_predicted) {
            throw std::logic_error("classify_large: cases " + std::string(to_string(result.tag)) +
                                   " and " + to_string(matches[i].tag) +
                                   " predict different m for q=" + std::to_string(q) +
                                   " e=" + std::to_string(e));
        }
        result.also.push_back(matches[i].tag);
    }
    return result;
}

Conjecture4Check conjecture4_check(const PowerSumInstance& inst, Int m_value) {
    if (!(inst.q > 1 && inst.q < inst.e)) {
        throw DomainError("conjecture4_check: need 1 < q < e");
    }
    Conjecture4Check c;
    const unsigned __int128 base = inst.e1 + 1;
    unsigned __int128 power = base * base;  // (e1 + 1)^(k+1) for k = 1
    c.k_min = 1;
    while (!(static_cast<unsigned __int128>(inst.e) + 1 < power)) {
        power *= base;
        ++c.k_min;
    }
    c.holds = m_value <= c.k_min * inst.e1;
    return c;
}

Conjecture4Check conjecture4_check(Int q, Int e) {
    const auto inst = PowerSumInstance::make(q, e);
    return conjecture4_check(inst, m(q, e).value);
}

VerificationReport verify_corollary8(Int e_max, const Sweep& sweep) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.claim_id = "corollary8";
    report.domain = "coprime 1 < q < e-1, e <= " + std::to_string(e_max);
    report.params = {{"e_max", e_max}};

    auto shard = sweep.run(4, e_max, [](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for (Int q = 2; q + 1 < e; ++q) {
            if (!t.is_unit(q)) continue;
            ++out.checks;
            const Int mv = t.m[q];
            const auto c = classify_large(q, e);
            const bool large = 6 * mv >= e;
            const bool tagged = c.tag != Corollary8Tag::none;
            for (auto other : c.also) {
                out.notes.push_back("q=" + std::to_string(q) + " e=" + std::to_string(e) +
                                    " matches case " + to_string(c.tag) + " and case " +
                                    to_string(other));
            }
            if (large != tagged) {
                out.violations.push_back(
                    {q, e, large ? "a listed case (m >= e/6)" : "no case (m < e/6)",
                     std::string("case ") + to_string(c.tag) + ", m=" + std::to_string(mv)});
            } else if (tagged && *c.m_predicted != mv) {
                out.violations.push_back({q, e,
                                          std::string("m=") + std::to_string(*c.m_predicted) +
                                              " (case " + to_string(c.tag) + ")",
                                          "m=" + std::to_string(mv)});
            }
        }
    });
    report.checks = shard.checks;
    report.violations = std::move(shard.violations);
    report.notes = std::move(shard.notes);

    if (e_max >= 120) {
        auto extent = check_exceptional_extent();
        report.checks += 5;
        report.violations.insert(report.violations.end(), extent.begin(), extent.end());
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport verify_prop2(Int r, Int e_min, Int e_max, const Sweep& sweep) {
    if (r < 2) throw DomainError("verify_prop2 needs r >= 2");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.claim_id = "prop2";
    report.domain = "coprime 1 < q < e, " + std::to_string(e_min) + " < e <= " +
                    std::to_string(e_max) + ", r = " + std::to_string(r);
    report.params = {{"r", r}, {"e_min", e_min}, {"e_max", e_max}};
    const __int128 cutoff = static_cast<__int128>(r) * r * r * r - 2 * static_cast<__int128>(r) * r;

    auto shard = sweep.run(e_min + 1, e_max, [&](const ModulusTable& t, ShardResult& out) {
        const Int e = t.modulus;
        for (Int q = 2; q < e; ++q) {
            if (!t.is_unit(q)) continue;
            const Int mv = t.m[q];
            const Int e1 = std::gcd(e, q - 1);
            const auto sp = star_params(q, e, r);
            if (sp) {
                ++out.checks;
                if (!(mv == e1 && mv * sp->a == e && mv * r >= e)) {
                    out.violations.push_back({q, e,
                                              "m = e1 = e/a = " + std::to_string(e / sp->a),
                                              "m=" + std::to_string(mv)});
                }
            }
            if (static_cast<__int128>(e) > cutoff && mv * r >= e) {
                ++out.checks;
                if (!sp) {
                    out.violations.push_back({q, e, "(a,b) parameters exist",
                                              "none, m=" + std::to_string(mv)});
                } else if (!(mv == e1 && mv * sp->a == e)) {
                    out.violations.push_back({q, e, "m = e1 = e/a",
                                              "m=" + std::to_string(mv)});
                }
            }
        }
    });
    report.checks = shard.checks;
    report.violations = std::move(shard.violations);
    report.notes = std::move(shard.notes);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<Violation> check_exceptional_extent() {
    std::vector<Violation> out;
    std::vector<known::ListedPair> all;
    for (const auto* list : {&known::kLargeMTwo, &known::kLargeMOrderTwo, &known::kLargeMSporadic}) {
        all.insert(all.end(), list->begin(), list->end());
    }
    for (Int c = 2; c <= 6; ++c) {
        const Int bound = 4 * c * c - 4 * c;
        bool attained = false;
        for (const auto& p : all) {
            const Int mv = m(p.q, p.e).value;
            if (c * mv < p.e) continue;
            if (p.e > bound) {
                out.push_back({p.q, p.e, "e <= " + std::to_string(bound) + " for c=" +
                                             std::to_string(c),
                               "e=" + std::to_string(p.e)});
            }
            if (p.e == bound && p.q == 2 * c - 1) attained = true;
        }
        if (!attained) {
            out.push_back({2 * c - 1, bound, "listed exception with m >= e/" + std::to_string(c),
                           "absent"});
        }
    }
    return out;
}

}  // namespace msum
