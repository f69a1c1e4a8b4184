#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "msum/engine.hpp"
#include "msum/report.hpp"
#include "msum/store.hpp"

namespace msum {

/// m, order and subgroup key for every residue q mod e (zeros at non-units).
///
/// Each subgroup is solved once and its value copied to all of its
/// generators, so a full table costs one m computation per cyclic subgroup.
struct ModulusTable {
    Int modulus = 1;
    std::vector<Int> m;
    std::vector<Int> order;
    std::vector<Int> key;
    std::vector<StoreRow> fresh_rows;  ///< rows computed here rather than read from a store

    bool is_unit(Int q) const { return m[q] != 0; }
};

ModulusTable modulus_table(Int e, const ResultStore* store = nullptr);

struct SweepOptions {
    unsigned jobs = 0;  ///< 0 = hardware concurrency
    ResultStore* store = nullptr;
};

/// Partial result for one modulus; shards merge in ascending e.
struct ShardResult {
    std::uint64_t checks = 0;
    std::vector<Violation> violations;
    std::vector<std::pair<Int, Int>> equality_cases;
    std::vector<std::string> notes;

    void merge(ShardResult&& other);
};

/// Runs `fn(i)` for i in [0, count) on `jobs` workers. Rethrows the first
/// exception after all workers stop.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

unsigned resolve_jobs(unsigned jobs);

/// Worker pool over modulus shards. Every shard owns all q for its e.
class Sweep {
public:
    using Visitor = std::function<void(const ModulusTable&, ShardResult&)>;

    explicit Sweep(SweepOptions options = {});

    unsigned jobs() const { return jobs_; }

    /// Visits e in [e_min, e_max]; the merged result does not depend on `jobs`.
    /// Fresh rows are appended to the store (if any) after all shards finish.
    ShardResult run(Int e_min, Int e_max, const Visitor& visit) const;

    template <typename T, typename Fn>
    std::vector<T> map(std::size_t count, Fn&& fn) const {
        std::vector<T> out(count);
        parallel_for(count, jobs_, [&](std::size_t i) { out[i] = fn(i); });
        return out;
    }

private:
    unsigned jobs_;
    ResultStore* store_;
};

}  // namespace msum
