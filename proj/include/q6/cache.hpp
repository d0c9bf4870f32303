#pragma once

#include "q6/core.hpp"
#include "q6/tables.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <vector>

namespace q6 {

// Binary table cache.  Layout, all integers little-endian:
//   magic "PTKT" | u32 version | u32 name-length, name bytes | u64 limit |
//   then per value: u32 magnitude byte-length | u8 sign (0 = nonnegative,
//   1 = negative) | magnitude bytes, least significant first.
class CacheError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void put_u32(std::ostream& os, uint32_t v)
{
    for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::ostream& os, uint64_t v)
{
    for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline uint32_t get_u32(std::istream& is)
{
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        int c = is.get();
        if (c == std::char_traits<char>::eof()) throw CacheError("cache: truncated u32");
        v |= static_cast<uint32_t>(c & 0xff) << (8 * i);
    }
    return v;
}

inline uint64_t get_u64(std::istream& is)
{
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        int c = is.get();
        if (c == std::char_traits<char>::eof()) throw CacheError("cache: truncated u64");
        v |= static_cast<uint64_t>(c & 0xff) << (8 * i);
    }
    return v;
}

} // namespace detail

inline constexpr uint32_t cache_version = 1;

inline void write_table_cache(const SequenceTable& table, const std::filesystem::path& path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CacheError("cache: cannot open " + path.string() + " for writing");
    os.write("PTKT", 4);
    detail::put_u32(os, cache_version);
    detail::put_u32(os, static_cast<uint32_t>(table.name.size()));
    os.write(table.name.data(), static_cast<std::streamsize>(table.name.size()));
    detail::put_u64(os, static_cast<uint64_t>(table.limit()));
    for (const Int& v : table.values) {
        std::vector<unsigned char> bytes;
        if (v != 0) {
            Int mag = v < 0 ? Int(-v) : v;
            boost::multiprecision::export_bits(mag, std::back_inserter(bytes), 8, false);
        }
        detail::put_u32(os, static_cast<uint32_t>(bytes.size()));
        os.put(v < 0 ? '\x01' : '\x00');
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
    }
    if (!os) throw CacheError("cache: write to " + path.string() + " failed");
}

inline SequenceTable read_table_cache(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CacheError("cache: cannot open " + path.string());
    char magic[4] = {};
    is.read(magic, 4);
    if (is.gcount() != 4 || std::string_view(magic, 4) != "PTKT")
        throw CacheError("cache: bad magic in " + path.string());
    uint32_t version = detail::get_u32(is);
    if (version != cache_version)
        throw CacheError("cache: unsupported version " + std::to_string(version));
    uint32_t name_len = detail::get_u32(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    if (is.gcount() != static_cast<std::streamsize>(name_len))
        throw CacheError("cache: truncated name");
    uint64_t limit = detail::get_u64(is);
    SequenceTable table{std::move(name), "cache", {}};
    table.values.reserve(limit + 1);
    for (uint64_t i = 0; i <= limit; ++i) {
        uint32_t len = detail::get_u32(is);
        int sign = is.get();
        if (sign == std::char_traits<char>::eof()) throw CacheError("cache: truncated sign byte");
        std::vector<unsigned char> bytes(len);
        is.read(reinterpret_cast<char*>(bytes.data()), len);
        if (is.gcount() != static_cast<std::streamsize>(len))
            throw CacheError("cache: truncated value " + std::to_string(i));
        Int v = 0;
        if (len > 0)
            boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8, false);
        if (sign == 1) v = -v;
        table.values.push_back(std::move(v));
    }
    return table;
}

} // namespace q6
