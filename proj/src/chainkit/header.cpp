// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/header.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

Bytes BlockHeader::serialize() const
{
    ByteWriter w;
    w.i32(version);
    w.raw(prev_hash);
    w.raw(merkle_root);
    w.u32(timestamp);
    w.u32(bits);
    w.u32(pow_nonce);
    return w.take();
}

BlockHeader BlockHeader::deserialize(ByteSpan data)
{
    if (data.size() != HEADER_SIZE)
        throw ParseError("block header must be exactly 80 bytes, got " + std::to_string(data.size()));
    ByteReader r(data);
    BlockHeader h;
    h.version = r.i32("header version");
    h.prev_hash = r.arr<32>("header prev_hash");
    h.merkle_root = r.arr<32>("header merkle_root");
    h.timestamp = r.u32("header timestamp");
    h.bits = r.u32("header bits");
    h.pow_nonce = r.u32("header pow_nonce");
    return h;
}

Hash256 BlockHeader::hash() const
{
    return double_sha256(serialize());
}

bool BlockHeader::meets_target() const
{
    return U256::from_le_bytes(hash()) <= U256::from_compact(bits);
}

} // namespace escrowsim
