// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_SUPPORT_BYTES_H
#define ESCROWSIM_SUPPORT_BYTES_H

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace escrowsim {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

using Hash256 = std::array<uint8_t, 32>;
using Hash160 = std::array<uint8_t, 20>;

inline Bytes to_bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);

template <size_t N>
std::string to_hex(const std::array<uint8_t, N>& a)
{
    return to_hex(ByteSpan(a.data(), a.size()));
}

template <size_t N>
std::array<uint8_t, N> array_from_hex(std::string_view hex)
{
    Bytes b = from_hex(hex);
    if (b.size() != N) throw std::invalid_argument("hex string has wrong length");
    std::array<uint8_t, N> out{};
    std::memcpy(out.data(), b.data(), N);
    return out;
}

// Needle search used by the exposure ledger and tests.
bool contains_subsequence(ByteSpan haystack, ByteSpan needle);

struct Hash256Hasher {
    size_t operator()(const Hash256& h) const noexcept
    {
        size_t v;
        std::memcpy(&v, h.data(), sizeof(v));
        return v;
    }
};

// Little-endian byte writer for the wire and file formats.
class ByteWriter {
public:
    void u8(uint8_t v) { m_buf.push_back(v); }
    void u16(uint16_t v)
    {
        for (int i = 0; i < 2; ++i) m_buf.push_back(uint8_t(v >> (8 * i)));
    }
    void u32(uint32_t v)
    {
        for (int i = 0; i < 4; ++i) m_buf.push_back(uint8_t(v >> (8 * i)));
    }
    void u64(uint64_t v)
    {
        for (int i = 0; i < 8; ++i) m_buf.push_back(uint8_t(v >> (8 * i)));
    }
    void i32(int32_t v) { u32(uint32_t(v)); }
    void raw(ByteSpan data) { m_buf.insert(m_buf.end(), data.begin(), data.end()); }
    template <size_t N>
    void raw(const std::array<uint8_t, N>& a) { raw(ByteSpan(a.data(), N)); }
    void str8(std::string_view s);

    const Bytes& data() const { return m_buf; }
    Bytes take() { return std::move(m_buf); }

private:
    Bytes m_buf;
};

// Bounds-checked little-endian reader. Throws ParseError with the region name
// on short input so truncated files produce a useful message.
class ByteReader {
public:
    explicit ByteReader(ByteSpan data) : m_data(data) {}

    uint8_t u8(const char* what);
    uint16_t u16(const char* what);
    uint32_t u32(const char* what);
    uint64_t u64(const char* what);
    int32_t i32(const char* what) { return int32_t(u32(what)); }
    ByteSpan raw(size_t n, const char* what);
    template <size_t N>
    std::array<uint8_t, N> arr(const char* what)
    {
        ByteSpan s = raw(N, what);
        std::array<uint8_t, N> out{};
        std::memcpy(out.data(), s.data(), N);
        return out;
    }
    std::string str8(const char* what);
    void expect_magic(ByteSpan magic, const char* what);

    size_t remaining() const { return m_data.size() - m_pos; }
    bool done() const { return m_pos == m_data.size(); }
    void expect_done(const char* what);

private:
    ByteSpan m_data;
    size_t m_pos = 0;
};

} // namespace escrowsim

#endif // ESCROWSIM_SUPPORT_BYTES_H
