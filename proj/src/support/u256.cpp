// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/support/u256.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

U256 U256::max()
{
    U256 v;
    for (auto& l : v.m_limb) l = ~uint64_t(0);
    return v;
}

U256 U256::pow2(unsigned bit)
{
    if (bit > 255) throw ValidationError("U256::pow2 exponent out of range");
    U256 v;
    v.m_limb[bit / 64] = uint64_t(1) << (bit % 64);
    return v;
}

U256 U256::from_le_bytes(const Hash256& digest)
{
    U256 v;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t x = 0;
        for (int i = 7; i >= 0; --i) x = x << 8 | digest[size_t(limb * 8 + i)];
        v.m_limb[limb] = x;
    }
    return v;
}

U256 U256::from_compact(uint32_t bits)
{
    unsigned exponent = bits >> 24;
    uint32_t mantissa = bits & 0x007FFFFF;
    if ((bits & 0x00800000) != 0 || mantissa == 0) return zero();

    if (exponent <= 3) {
        mantissa >>= 8 * (3 - exponent);
        U256 v;
        v.m_limb[0] = mantissa;
        return v;
    }
    unsigned bit_shift = 8 * (exponent - 3);
    unsigned bit_length = 32 - unsigned(__builtin_clz(mantissa));
    if (bit_shift + bit_length > 256) {
        // Past 2^256; only reachable for deliberately easy targets, where
        // "everything passes" is the intended meaning.
        return max();
    }
    U256 v;
    unsigned limb = bit_shift / 64;
    unsigned off = bit_shift % 64;
    unsigned __int128 wide = static_cast<unsigned __int128>(mantissa) << off;
    v.m_limb[limb] = uint64_t(wide);
    if (limb + 1 < 4) v.m_limb[limb + 1] = uint64_t(wide >> 64);
    return v;
}

std::strong_ordering U256::operator<=>(const U256& other) const
{
    for (int i = 3; i >= 0; --i) {
        if (m_limb[i] != other.m_limb[i])
            return m_limb[i] < other.m_limb[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string U256::to_hex() const
{
    Bytes be(32);
    for (int limb = 0; limb < 4; ++limb) {
        for (int i = 0; i < 8; ++i) {
            be[size_t(31 - (limb * 8 + i))] = uint8_t(m_limb[limb] >> (8 * i));
        }
    }
    return escrowsim::to_hex(be);
}

uint32_t compact_from_pow2(unsigned bit)
{
    if (bit > 255) throw ValidationError("compact_from_pow2 exponent out of range");
    unsigned q = bit / 8;
    unsigned r = bit % 8;
    // target = (1 << r) * 256^q  =>  mantissa = 1 << r, exponent = q + 3
    return uint32_t(q + 3) << 24 | uint32_t(1u << r);
}

} // namespace escrowsim
