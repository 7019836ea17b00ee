// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>

#include <algorithm>

namespace escrowsim {

Hash256 merkle_root(const std::vector<Hash256>& txids)
{
    if (txids.empty()) throw ValidationError("merkle root of an empty block");
    std::vector<Hash256> level = txids;
    while (level.size() > 1) {
        if (level.size() % 2 == 1) level.push_back(level.back());
        std::vector<Hash256> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2)
            next.push_back(double_sha256_concat(level[i], level[i + 1]));
        level = std::move(next);
    }
    return level[0];
}

Bytes MerkleProof::serialize() const
{
    ByteWriter w;
    w.raw(leaf_txid);
    w.u16(uint16_t(siblings.size()));
    for (const ProofStep& s : siblings) {
        w.u8(s.sibling_on_left ? 1 : 0);
        w.raw(s.digest);
    }
    w.raw(block_hash);
    return w.take();
}

MerkleProof MerkleProof::deserialize(ByteReader& r)
{
    MerkleProof p;
    p.leaf_txid = r.arr<32>("proof leaf txid");
    uint16_t count = r.u16("proof sibling count");
    for (uint16_t i = 0; i < count; ++i) {
        ProofStep s;
        uint8_t side = r.u8("proof sibling side");
        if (side > 1) throw ParseError("proof sibling side must be 0 or 1");
        s.sibling_on_left = side == 1;
        s.digest = r.arr<32>("proof sibling digest");
        p.siblings.push_back(s);
    }
    p.block_hash = r.arr<32>("proof block hash");
    return p;
}

MerkleProof build_proof(const std::vector<Hash256>& txids, const Hash256& txid,
                        const Hash256& block_hash)
{
    auto it = std::find(txids.begin(), txids.end(), txid);
    if (it == txids.end()) throw ValidationError("txid not in block: " + to_hex(txid));

    MerkleProof proof;
    proof.leaf_txid = txid;
    proof.block_hash = block_hash;

    size_t index = size_t(it - txids.begin());
    std::vector<Hash256> level = txids;
    while (level.size() > 1) {
        if (level.size() % 2 == 1) level.push_back(level.back());
        size_t sibling = index ^ 1;
        proof.siblings.push_back({level[sibling], sibling < index});
        std::vector<Hash256> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2)
            next.push_back(double_sha256_concat(level[i], level[i + 1]));
        level = std::move(next);
        index /= 2;
    }
    return proof;
}

bool verify_proof(const Hash256& root, const MerkleProof& proof)
{
    Hash256 acc = proof.leaf_txid;
    for (const ProofStep& s : proof.siblings) {
        acc = s.sibling_on_left ? double_sha256_concat(s.digest, acc)
                                : double_sha256_concat(acc, s.digest);
    }
    return acc == root;
}

} // namespace escrowsim
