// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/support/bytes.hpp>
#include <escrowsim/support/errors.hpp>

#include <algorithm>

namespace escrowsim {

static constexpr char HEX_DIGITS[] = "0123456789abcdef";

std::string to_hex(ByteSpan data)
{
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(HEX_DIGITS[b >> 4]);
        out.push_back(HEX_DIGITS[b & 0x0F]);
    }
    return out;
}

static int hex_val(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0) throw ParseError("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_val(hex[i]);
        int lo = hex_val(hex[i + 1]);
        if (hi < 0 || lo < 0) throw ParseError("invalid hex digit");
        out.push_back(uint8_t(hi << 4 | lo));
    }
    return out;
}

bool contains_subsequence(ByteSpan haystack, ByteSpan needle)
{
    if (needle.empty()) return true;
    if (needle.size() > haystack.size()) return false;
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end());
    return it != haystack.end();
}

void ByteWriter::str8(std::string_view s)
{
    if (s.size() > 255) throw ValidationError("string too long for str8 field");
    u8(uint8_t(s.size()));
    raw(ByteSpan(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

static ParseError short_input(const char* what)
{
    return ParseError(std::string("truncated input: missing ") + what);
}

uint8_t ByteReader::u8(const char* what)
{
    if (remaining() < 1) throw short_input(what);
    return m_data[m_pos++];
}

uint16_t ByteReader::u16(const char* what)
{
    if (remaining() < 2) throw short_input(what);
    uint16_t v = uint16_t(m_data[m_pos]) | uint16_t(m_data[m_pos + 1]) << 8;
    m_pos += 2;
    return v;
}

uint32_t ByteReader::u32(const char* what)
{
    if (remaining() < 4) throw short_input(what);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = v << 8 | m_data[m_pos + size_t(i)];
    m_pos += 4;
    return v;
}

uint64_t ByteReader::u64(const char* what)
{
    if (remaining() < 8) throw short_input(what);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | m_data[m_pos + size_t(i)];
    m_pos += 8;
    return v;
}

ByteSpan ByteReader::raw(size_t n, const char* what)
{
    if (remaining() < n) throw short_input(what);
    ByteSpan s = m_data.subspan(m_pos, n);
    m_pos += n;
    return s;
}

std::string ByteReader::str8(const char* what)
{
    size_t n = u8(what);
    ByteSpan s = raw(n, what);
    return std::string(s.begin(), s.end());
}

void ByteReader::expect_magic(ByteSpan magic, const char* what)
{
    ByteSpan got = raw(magic.size(), what);
    if (!std::equal(magic.begin(), magic.end(), got.begin()))
        throw ParseError(std::string("bad magic: not a ") + what);
}

void ByteReader::expect_done(const char* what)
{
    if (!done()) throw ParseError(std::string("trailing bytes after ") + what);
}

} // namespace escrowsim
