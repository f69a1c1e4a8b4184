#pragma once

// Append-only on-disk table of computed m values.
//
// Layout (all integers little-endian):
//   header, 48 bytes:
//     magic        8 bytes  "MSUMSTOR"
//     version      u32      1
//     row_size     u32      32
//     e_min        u64      smallest modulus present (0 when empty)
//     e_max        u64      largest modulus present (0 when empty)
//     row_count    u64
//     checksum     u64      FNV-1a over all row bytes
//   rows, 32 bytes each, in insertion order:
//     e            u64
//     key          u64      least generator of the subgroup mod e
//     m            u64
//     witness_hash u64      FNV-1a of the witness exponents (relative to key)

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <vector>

#include "msum/engine.hpp"

namespace msum {

struct StoreRow {
    Int e = 0;
    Int key = 0;
    Int m = 0;
    std::uint64_t witness_hash = 0;

    bool operator==(const StoreRow&) const = default;
};

class ResultStore {
public:
    static constexpr std::uint32_t kVersion = 1;

    ResultStore() = default;

    /// Throws std::runtime_error on a missing file, bad magic, or checksum mismatch.
    static ResultStore load(const std::filesystem::path& path);
    /// Loads `path` when it exists, otherwise starts empty.
    static ResultStore open(const std::filesystem::path& path);

    void save(const std::filesystem::path& path) const;

    std::optional<StoreRow> find(Int e, Int key) const;
    /// Returns false (and keeps the existing row) when (e, key) is already present.
    bool append(const StoreRow& row);

    const std::vector<StoreRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    Int e_min() const { return e_min_; }
    Int e_max() const { return e_max_; }

private:
    std::vector<StoreRow> rows_;
    std::unordered_map<SubgroupKey, std::size_t, SubgroupKeyHash> index_;
    Int e_min_ = 0;
    Int e_max_ = 0;
};

}  // namespace msum
