// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_HEADER_H
#define ESCROWSIM_CHAINKIT_HEADER_H

#include <escrowsim/support/bytes.hpp>
#include <escrowsim/support/u256.hpp>

#include <cstdint>

namespace escrowsim {

inline constexpr size_t HEADER_SIZE = 80;

// Bitcoin-layout block header. Integers little-endian, digests in internal
// byte order; the serialized form is exactly 80 bytes.
struct BlockHeader {
    int32_t version = 0;
    Hash256 prev_hash{};
    Hash256 merkle_root{};
    uint32_t timestamp = 0;
    uint32_t bits = 0;
    uint32_t pow_nonce = 0;

    Bytes serialize() const;
    static BlockHeader deserialize(ByteSpan data); // exactly 80 bytes

    // Double-SHA-256 of the serialized header.
    Hash256 hash() const;

    // hash(), read as a 256-bit little-endian integer, is <= the target
    // expanded from bits.
    bool meets_target() const;

    bool operator==(const BlockHeader&) const = default;
};

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_HEADER_H
