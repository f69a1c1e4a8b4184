#include "msum/store.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace msum {

namespace {

constexpr std::array<char, 8> kMagic{'M', 'S', 'U', 'M', 'S', 'T', 'O', 'R'};
constexpr std::size_t kHeaderSize = 48;
constexpr std::size_t kRowSize = 32;

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

std::uint64_t fnv1a(const unsigned char* data, std::size_t len) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

ResultStore ResultStore::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open store " + path.string());
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (bytes.size() < kHeaderSize ||
        std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
        throw std::runtime_error("store " + path.string() + " has a bad header");
    }
    const unsigned char* h = bytes.data();
    if (get_u32(h + 8) != kVersion || get_u32(h + 12) != kRowSize) {
        throw std::runtime_error("store " + path.string() + " has an unsupported version");
    }
    const std::uint64_t count = get_u64(h + 32);
    if (bytes.size() != kHeaderSize + count * kRowSize) {
        throw std::runtime_error("store " + path.string() + " is truncated");
    }
    if (fnv1a(h + kHeaderSize, count * kRowSize) != get_u64(h + 40)) {
        throw std::runtime_error("store " + path.string() + " fails its checksum");
    }
    ResultStore store;
    for (std::uint64_t i = 0; i < count; ++i) {
        const unsigned char* r = h + kHeaderSize + i * kRowSize;
        store.append({get_u64(r), get_u64(r + 8), get_u64(r + 16), get_u64(r + 24)});
    }
    return store;
}

ResultStore ResultStore::open(const std::filesystem::path& path) {
    if (std::filesystem::exists(path)) return load(path);
    return {};
}

void ResultStore::save(const std::filesystem::path& path) const {
    std::vector<unsigned char> body;
    body.reserve(rows_.size() * kRowSize);
    for (const auto& r : rows_) {
        put_u64(body, r.e);
        put_u64(body, r.key);
        put_u64(body, r.m);
        put_u64(body, r.witness_hash);
    }
    std::vector<unsigned char> header(kMagic.begin(), kMagic.end());
    put_u32(header, kVersion);
    put_u32(header, kRowSize);
    put_u64(header, e_min_);
    put_u64(header, e_max_);
    put_u64(header, rows_.size());
    put_u64(header, fnv1a(body.data(), body.size()));

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write store " + tmp.string());
        out.write(reinterpret_cast<const char*>(header.data()),
                  static_cast<std::streamsize>(header.size()));
        out.write(reinterpret_cast<const char*>(body.data()),
                  static_cast<std::streamsize>(body.size()));
    }
    std::filesystem::rename(tmp, path);
}

std::optional<StoreRow> ResultStore::find(Int e, Int key) const {
    auto it = index_.find(SubgroupKey{e, key});
    if (it == index_.end()) return std::nullopt;
    return rows_[it->second];
}

bool ResultStore::append(const StoreRow& row) {
    auto [it, inserted] = index_.try_emplace(SubgroupKey{row.e, row.key}, rows_.size());
    if (!inserted) return false;
    rows_.push_back(row);
    e_min_ = rows_.size() == 1 ? row.e : std::min(e_min_, row.e);
    e_max_ = std::max(e_max_, row.e);
    return true;
}

}  // namespace msum
