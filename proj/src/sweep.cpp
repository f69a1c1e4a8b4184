#include "msum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace msum {

ModulusTable modulus_table(Int e, const ResultStore* store) {
    ModulusTable t;
    t.modulus = e;
    t.m.assign(e, 0);
    t.order.assign(e, 0);
    t.key.assign(e, 0);
    if (e == 1) {
        t.m[0] = 1;
        t.order[0] = 1;
        return t;
    }
    std::vector<Int> powers;
    for (Int q = 1; q < e; ++q) {
        if (t.m[q] != 0 || std::gcd(q, e) != 1) continue;
        powers.clear();
        Int x = 1;
        do {
            powers.push_back(x);
            x = mul_mod(x, q, e);
        } while (x != 1);
        const Int n = powers.size();

        Int key = q;
        for (Int s = 1; s < n; ++s) {
            if (std::gcd(s, n) == 1) key = std::min(key, powers[s]);
        }

        Int value = 0;
        if (store) {
            if (auto row = store->find(e, key)) value = row->m;
        }
        if (value == 0) {
            UnitSubgroup group{e, powers, n, key};
            std::sort(group.elements.begin(), group.elements.end());
            const auto solved = m_of_subgroup(group);
            value = solved.value;
            t.fresh_rows.push_back({e, key, value, witness_hash(solved.witness)});
        }
        for (Int s = 1; s <= n; ++s) {
            if (std::gcd(s, n) != 1) continue;
            const Int g = powers[s % n];
            t.m[g] = value;
            t.order[g] = n;
            t.key[g] = key;
        }
    }
    return t;
}

void ShardResult::merge(ShardResult&& other) {
    checks += other.checks;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.equality_cases.begin(), other.equality_cases.end(),
              std::back_inserter(equality_cases));
    std::move(other.notes.begin(), other.notes.end(), std::back_inserter(notes));
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

Sweep::Sweep(SweepOptions options) : jobs_(resolve_jobs(options.jobs)), store_(options.store) {}

ShardResult Sweep::run(Int e_min, Int e_max, const Visitor& visit) const {
    ShardResult merged;
    if (e_min < 1) e_min = 1;
    if (e_max < e_min) return merged;
    const std::size_t count = e_max - e_min + 1;
    std::vector<ShardResult> shards(count);
    std::vector<std::vector<StoreRow>> fresh(count);
    const ResultStore* reader = store_;
    parallel_for(count, jobs_, [&](std::size_t i) {
        const auto table = modulus_table(e_min + i, reader);
        visit(table, shards[i]);
        fresh[i] = table.fresh_rows;
    });
    for (std::size_t i = 0; i < count; ++i) {
        merged.merge(std::move(shards[i]));
        if (store_) {
            for (const auto& row : fresh[i]) store_->append(row);
        }
    }
    return merged;
}

}  // namespace msum
