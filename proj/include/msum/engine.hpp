#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "msum/modular.hpp"

namespace msum {

enum class Strategy {
    automatic,
    level_growth,  ///< frontier BFS over Z/eZ, one edge per subgroup element
    orbit_growth,  ///< the same BFS run on orbits of the subgroup acting by multiplication
    split_search,  ///< meet-in-the-middle over exponent multisets (large e, small n)
};

const char* to_string(Strategy s);

/// Outcome of an m computation.
///
/// `witness` holds exponents a_1 <= ... <= a_m in [0, n) of the generator the
/// computation was phrased in. `level_sizes[t-1]` is |A_t|, the number of
/// residues that are sums of at most t subgroup elements; it is filled by the
/// growth strategies and left empty by the split search.
struct MResult {
    Int value = 0;
    std::vector<Int> witness;
    std::vector<Int> level_sizes;
    Strategy strategy = Strategy::automatic;
};

/// Level sets A_1 ⊂ A_2 ⊂ ... of the sumset growth, built breadth-first until
/// the first level that contains 0 (or `max_levels`, if nonzero).
class LevelSets {
public:
    static LevelSets grow(const UnitSubgroup& subgroup, std::size_t max_levels = 0);

    Int modulus() const { return modulus_; }
    std::size_t depth() const { return sizes_.size(); }
    bool reached_zero() const { return zero_level_ != 0; }
    std::size_t zero_level() const { return zero_level_; }

    /// Whether x is in A_level (level counted from 1).
    bool contains(std::size_t level, Int x) const;
    Int size(std::size_t level) const { return sizes_.at(level - 1); }
    std::span<const Int> sizes() const { return sizes_; }
    std::span<const Int> frontier() const { return frontier_; }

    /// Subgroup elements summing to x along the recorded predecessor chain.
    std::vector<Int> decompose(Int x) const;

private:
    Int modulus_ = 1;
    std::vector<Int> elements_;
    std::vector<std::uint32_t> first_level_;  // 0 = unreached
    std::vector<std::uint32_t> via_;          // index into elements_ of the last summand
    std::vector<Int> sizes_;
    std::vector<Int> frontier_;
    std::size_t zero_level_ = 0;
};

/// Moduli up to this size run the dense growth strategies under `automatic`.
inline constexpr Int kDenseModulusLimit = Int{1} << 23;

/// Largest number of exponent multisets the split search will tabulate per side.
inline constexpr std::uint64_t kSplitSearchBudget = 40'000'000;

/// Least t with a vanishing sum of t elements of the subgroup, with a witness
/// in exponents of `subgroup.generator`. Pure; safe to call concurrently.
MResult m_of_subgroup(const UnitSubgroup& subgroup, Strategy strategy = Strategy::automatic);

/// Cache key: two generators of the same subgroup mod e give identical keys.
struct SubgroupKey {
    Int modulus = 1;
    Int canonical_generator = 0;  ///< least residue generating the subgroup

    bool operator==(const SubgroupKey&) const = default;
};

struct SubgroupKeyHash {
    std::size_t operator()(const SubgroupKey& k) const noexcept;
};

/// Canonical key of <q> mod e, and s with canonical_generator = q^s.
std::pair<SubgroupKey, Int> subgroup_key(Int q, Int e);

/// Thread-safe memo of m values keyed by subgroup.
class MSumEngine {
public:
    MSumEngine() = default;
    MSumEngine(const MSumEngine&) = delete;
    MSumEngine& operator=(const MSumEngine&) = delete;

    /// m(q, e) with a witness in exponents of q. Throws NotCoprime.
    MResult m(Int q, Int e);

    std::size_t cache_size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<SubgroupKey, std::shared_ptr<const MResult>, SubgroupKeyHash> cache_;
};

/// m(q, e) through a process-wide engine.
MResult m(Int q, Int e);

/// Upper bound ceil(e / n) on m.
Int ceil_bound(const PowerSumInstance& inst);

/// m = 2 criterion: e = 2, or n even with q^(n/2) = -1 (mod e).
bool is_m_two(const PowerSumInstance& inst);

/// Closed form of m(q, 2^k) for odd q.
Int two_power_m(Int q, unsigned k);

/// Sum of q^a over the witness vanishes mod e and the witness has `claimed` terms.
bool verify_witness(Int q, Int e, std::span<const Int> witness, Int claimed);
bool verify_witness(Int q, Int e, const MResult& result);

/// FNV-1a over the witness exponents; stable across platforms.
std::uint64_t witness_hash(std::span<const Int> witness);

}  // namespace msum
