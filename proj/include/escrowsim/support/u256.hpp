// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_SUPPORT_U256_H
#define ESCROWSIM_SUPPORT_U256_H

#include <escrowsim/support/bytes.hpp>

#include <compare>
#include <cstdint>

namespace escrowsim {

// Unsigned 256-bit integer, just enough arithmetic for proof-of-work targets:
// compact-bits expansion, comparison, and construction from a little-endian
// digest. Stored as four little-endian 64-bit limbs.
class U256 {
public:
    U256() = default;

    static U256 zero() { return U256(); }
    static U256 max();
    static U256 pow2(unsigned bit); // bit <= 255

    // A block hash interpreted as a 256-bit little-endian integer.
    static U256 from_le_bytes(const Hash256& digest);

    // Bitcoin compact representation: target = mantissa * 256^(exponent-3).
    // Values that overflow 256 bits saturate to max(). Negative (sign bit in
    // the mantissa) or zero compacts expand to zero.
    static U256 from_compact(uint32_t bits);

    std::strong_ordering operator<=>(const U256& other) const;
    bool operator==(const U256& other) const = default;

    bool is_zero() const { return m_limb[0] == 0 && m_limb[1] == 0 && m_limb[2] == 0 && m_limb[3] == 0; }

    std::string to_hex() const; // big-endian, 64 digits

private:
    uint64_t m_limb[4] = {0, 0, 0, 0};
};

// Compact encoding of the target 2^bit; used for toy difficulties in tests
// and experiments. bit must be <= 255.
uint32_t compact_from_pow2(unsigned bit);

// A compact target that every hash satisfies (expands past 2^256 and
// saturates), for instant mining in tests.
inline constexpr uint32_t COMPACT_ALWAYS_PASS = 0x227FFFFF;

} // namespace escrowsim

#endif // ESCROWSIM_SUPPORT_U256_H
