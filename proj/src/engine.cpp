#include "msum/engine.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

namespace msum {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::automatic: return "automatic";
        case Strategy::level_growth: return "level_growth";
        case Strategy::orbit_growth: return "orbit_growth";
        case Strategy::split_search: return "split_search";
    }
    return "unknown";
}

namespace {

std::vector<Int> powers_of(Int generator, Int order, Int e) {
    std::vector<Int> powers(order);
    Int x = 1 % e;
    for (Int j = 0; j < order; ++j) {
        powers[j] = x;
        x = mul_mod(x, generator, e);
    }
    return powers;
}

void require_dense(Int e, const char* who) {
    if (e > kDenseModulusLimit) {
        throw CapacityError(std::string(who) + ": modulus " + std::to_string(e) +
                            " exceeds the dense limit");
    }
}

MResult trivial_modulus_result(Strategy s) {
    MResult r;
    r.value = 1;
    r.witness = {0};
    r.strategy = s;
    return r;
}

MResult solve_by_levels(const UnitSubgroup& subgroup) {
    const Int e = subgroup.modulus;
    if (e == 1) return trivial_modulus_result(Strategy::level_growth);
    auto levels = LevelSets::grow(subgroup);
    MResult r;
    r.strategy = Strategy::level_growth;
    r.value = levels.zero_level();
    auto sizes = levels.sizes();
    r.level_sizes.assign(sizes.begin(), sizes.end() - 1);

    const auto powers = powers_of(subgroup.generator, subgroup.order, e);
    std::unordered_map<Int, Int> log;
    for (Int j = 0; j < powers.size(); ++j) log.emplace(powers[j], j);
    for (Int a : levels.decompose(0)) r.witness.push_back(log.at(a));
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

// BFS over orbits of the subgroup A acting on Z/eZ by multiplication. Every
// level set is a union of such orbits, and F + A for an orbit F with entry x
// is the union of the orbits of x*c + 1 for c in A, so each orbit is expanded
// with |A| products instead of |A|^2 sums.
MResult solve_by_orbits(const UnitSubgroup& subgroup) {
    const Int e = subgroup.modulus;
    if (e == 1) return trivial_modulus_result(Strategy::orbit_growth);
    require_dense(e, "orbit_growth");
    const Int n = subgroup.order;
    const auto powers = powers_of(subgroup.generator, n, e);

    std::vector<std::uint32_t> orbit_of(e, 0);
    std::vector<Int> entry;            // orbit id - 1 -> first residue reached
    std::vector<std::uint32_t> level;  // orbit id - 1 -> level
    auto mark = [&](Int y, std::uint32_t lvl) {
        entry.push_back(y);
        level.push_back(lvl);
        const auto id = static_cast<std::uint32_t>(entry.size());
        Int added = 0;
        for (Int p : powers) {
            auto& slot = orbit_of[mul_mod(y, p, e)];
            if (slot == 0) {
                slot = id;
                ++added;
            }
        }
        return added;
    };

    MResult r;
    r.strategy = Strategy::orbit_growth;
    Int total = mark(1, 1);
    std::vector<std::uint32_t> frontier{1};
    std::uint32_t current = 1;
    bool found = false;
    while (!found) {
        r.level_sizes.push_back(total);
        std::vector<std::uint32_t> next;
        for (auto id : frontier) {
            const Int x = entry[id - 1];
            for (Int p : powers) {
                const Int y = add_mod(mul_mod(x, p, e), 1, e);
                if (y == 0) {
                    found = true;
                    break;
                }
                if (orbit_of[y] == 0) {
                    total += mark(y, current + 1);
                    next.push_back(static_cast<std::uint32_t>(entry.size()));
                }
            }
            if (found) break;
        }
        ++current;
        frontier = std::move(next);
    }
    r.value = current;

    // Unwind: z lies in the orbit with entry y0 = parent + 1, z = y0 * g^j, so
    // z = g^j + parent * g^j with parent * g^j one level down.
    Int z = 0;
    Int y0 = 0;
    std::uint32_t lvl = current;
    while (true) {
        Int j = 0;
        while (mul_mod(y0, powers[j], e) != z) ++j;
        r.witness.push_back(j);
        if (lvl == 1) break;
        z = mul_mod((y0 + e - 1) % e, powers[j], e);
        const auto id = orbit_of[z];
        y0 = entry[id - 1];
        lvl = level[id - 1];
    }
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

std::uint64_t multiset_count(Int n, Int len) {
    // C(n + len - 1, len), saturating.
    unsigned __int128 c = 1;
    for (Int i = 1; i <= len; ++i) {
        c = c * (n + i - 1) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(c);
}

// Visits nondecreasing exponent tuples of length `len` over [0, n) in
// lexicographic order, passing the residue sum and the tuple.
template <typename Visit>
void for_each_multiset(const std::vector<Int>& powers, Int e, Int len, Visit&& visit) {
    const Int n = powers.size();
    std::vector<Int> tuple(len, 0);
    std::vector<Int> partial(len + 1, 0);  // partial[i] = sum of tuple[0..i)
    if (len == 0) {
        visit(Int{0}, tuple);
        return;
    }
    std::size_t depth = 0;
    tuple[0] = 0;
    while (true) {
        partial[depth + 1] = add_mod(partial[depth], powers[tuple[depth]], e);
        if (depth + 1 == len) {
            visit(partial[len], tuple);
            // advance
            while (true) {
                if (++tuple[depth] < n) break;
                if (depth == 0) return;
                --depth;
            }
            continue;
        }
        tuple[depth + 1] = tuple[depth];
        ++depth;
        continue;
    }
}

MResult solve_by_split(const UnitSubgroup& subgroup) {
    const Int e = subgroup.modulus;
    if (e == 1) return trivial_modulus_result(Strategy::split_search);
    const Int n = subgroup.order;
    const auto powers = powers_of(subgroup.generator, n, e);

    struct Entry {
        Int sum;
        std::uint32_t index;
        bool operator<(const Entry& o) const {
            return sum != o.sum ? sum < o.sum : index < o.index;
        }
    };
    std::vector<Entry> right;
    Int right_len = std::numeric_limits<Int>::max();

    // Every vanishing sum can be rotated (multiplied by a subgroup element) to
    // contain g^0, so the left half always carries exponent 0.
    for (Int t = 1;; ++t) {
        const Int left_free = (t + 1) / 2 - 1;
        const Int rlen = t / 2;
        if (multiset_count(n, rlen) > kSplitSearchBudget ||
            multiset_count(n, left_free) > 4 * kSplitSearchBudget) {
            throw CapacityError("split_search: modulus " + std::to_string(e) + " with order " +
                                std::to_string(n) + " needs more than the search budget at t=" +
                                std::to_string(t));
        }
        if (rlen != right_len) {
            right.clear();
            right.reserve(multiset_count(n, rlen));
            std::uint32_t idx = 0;
            for_each_multiset(powers, e, rlen, [&](Int s, const std::vector<Int>&) {
                right.push_back({s, idx++});
            });
            std::sort(right.begin(), right.end());
            right_len = rlen;
        }

        std::optional<std::vector<Int>> left_hit;
        std::uint32_t right_index = 0;
        for_each_multiset(powers, e, left_free, [&](Int s, const std::vector<Int>& tuple) {
            if (left_hit) return;
            const Int need = (e - add_mod(s, 1, e)) % e;
            auto it = std::lower_bound(right.begin(), right.end(), Entry{need, 0});
            if (it != right.end() && it->sum == need) {
                left_hit = tuple;
                right_index = it->index;
            }
        });
        if (!left_hit) continue;

        MResult r;
        r.strategy = Strategy::split_search;
        r.value = t;
        r.witness.push_back(0);
        r.witness.insert(r.witness.end(), left_hit->begin(), left_hit->end());
        std::uint32_t idx = 0;
        for_each_multiset(powers, e, rlen, [&](Int, const std::vector<Int>& tuple) {
            if (idx++ == right_index) r.witness.insert(r.witness.end(), tuple.begin(), tuple.end());
        });
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }
}

}  // namespace

LevelSets LevelSets::grow(const UnitSubgroup& subgroup, std::size_t max_levels) {
    const Int e = subgroup.modulus;
    require_dense(e, "level_growth");
    LevelSets ls;
    ls.modulus_ = e;
    ls.elements_ = subgroup.elements;
    ls.first_level_.assign(e, 0);
    ls.via_.assign(e, 0);
    for (std::uint32_t i = 0; i < ls.elements_.size(); ++i) {
        ls.first_level_[ls.elements_[i]] = 1;
        ls.via_[ls.elements_[i]] = i;
    }
    ls.frontier_ = ls.elements_;
    ls.sizes_.push_back(ls.elements_.size());
    if (ls.first_level_[0] != 0) ls.zero_level_ = 1;

    while (ls.zero_level_ == 0 && (max_levels == 0 || ls.sizes_.size() < max_levels)) {
        const auto next_level = static_cast<std::uint32_t>(ls.sizes_.size() + 1);
        std::vector<Int> next;
        // Outer loop over ascending elements: a residue keeps the smallest
        // element that first reached it.
        for (std::uint32_t i = 0; i < ls.elements_.size(); ++i) {
            const Int a = ls.elements_[i];
            for (Int x : ls.frontier_) {
                const Int y = add_mod(x, a, e);
                if (ls.first_level_[y] == 0) {
                    ls.first_level_[y] = next_level;
                    ls.via_[y] = i;
                    next.push_back(y);
                }
            }
        }
        std::sort(next.begin(), next.end());
        ls.sizes_.push_back(ls.sizes_.back() + next.size());
        ls.frontier_ = std::move(next);
        if (ls.first_level_[0] != 0) ls.zero_level_ = next_level;
    }
    return ls;
}

bool LevelSets::contains(std::size_t level, Int x) const {
    const auto first = first_level_.at(x % modulus_);
    return first != 0 && first <= level;
}

std::vector<Int> LevelSets::decompose(Int x) const {
    x %= modulus_;
    std::vector<Int> parts;
    for (auto lvl = first_level_.at(x); lvl > 0; --lvl) {
        const Int a = elements_[via_[x]];
        parts.push_back(a);
        x = (x + modulus_ - a) % modulus_;
    }
    return parts;
}

MResult m_of_subgroup(const UnitSubgroup& subgroup, Strategy strategy) {
    if (strategy == Strategy::automatic) {
        strategy = subgroup.modulus <= kDenseModulusLimit ? Strategy::orbit_growth
                                                          : Strategy::split_search;
    }
    switch (strategy) {
        case Strategy::level_growth: return solve_by_levels(subgroup);
        case Strategy::orbit_growth: return solve_by_orbits(subgroup);
        case Strategy::split_search: return solve_by_split(subgroup);
        case Strategy::automatic: break;
    }
    throw std::logic_error("unhandled strategy");
}

std::size_t SubgroupKeyHash::operator()(const SubgroupKey& k) const noexcept {
    return std::hash<Int>{}(k.modulus * 0x9E3779B97F4A7C15ULL ^ k.canonical_generator);
}

std::pair<SubgroupKey, Int> subgroup_key(Int q, Int e) {
    const Int n = mul_order(q, e);
    q %= e;
    SubgroupKey key{e, q};
    Int best_s = 1;
    Int x = q;
    for (Int s = 1; s <= n; ++s) {
        if (s > 1) x = mul_mod(x, q, e);
        if (std::gcd(s, n) == 1 && x < key.canonical_generator) {
            key.canonical_generator = x;
            best_s = s;
        }
    }
    return {key, best_s};
}

MResult MSumEngine::m(Int q, Int e) {
    const auto inst = PowerSumInstance::make(q, e);
    const auto [key, s] = subgroup_key(inst.q, e);

    std::shared_ptr<const MResult> solved;
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) solved = it->second;
    }
    if (!solved) {
        auto fresh = std::make_shared<const MResult>(
            m_of_subgroup(unit_subgroup(key.canonical_generator, e)));
        std::unique_lock lock(mutex_);
        solved = cache_.try_emplace(key, std::move(fresh)).first->second;
    }

    MResult r = *solved;
    for (auto& a : r.witness) {
        a = static_cast<Int>(static_cast<unsigned __int128>(a) * s % inst.n);
    }
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

std::size_t MSumEngine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void MSumEngine::clear() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

MResult m(Int q, Int e) {
    static MSumEngine engine;
    return engine.m(q, e);
}

Int ceil_bound(const PowerSumInstance& inst) {
    return (inst.e + inst.n - 1) / inst.n;
}

bool is_m_two(const PowerSumInstance& inst) {
    if (inst.e == 2) return true;
    return inst.e > 2 && inst.n % 2 == 0 && pow_mod(inst.q, inst.n / 2, inst.e) == inst.e - 1;
}

Int two_power_m(Int q, unsigned k) {
    if (q % 2 == 0) throw DomainError("two_power_m needs odd q");
    if (k == 0) return 1;
    if (k == 1) return 2;
    const Int e = checked_pow(2, k);
    if (q % 4 == 1) return std::gcd(e, (q - 1) % e);
    if ((q + 1) % e == 0) return 2;
    return 4;
}

bool verify_witness(Int q, Int e, std::span<const Int> witness, Int claimed) {
    if (e == 0 || witness.size() != claimed) return false;
    Int sum = 0;
    for (Int a : witness) sum = add_mod(sum, pow_mod(q, a, e), e);
    return sum == 0;
}

bool verify_witness(Int q, Int e, const MResult& result) {
    return verify_witness(q, e, result.witness, result.value);
}

std::uint64_t witness_hash(std::span<const Int> witness) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Int a : witness) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (a >> (8 * byte)) & 0xFF;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

}  // namespace msum
