// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_MERKLE_H
#define ESCROWSIM_CHAINKIT_MERKLE_H

#include <escrowsim/support/bytes.hpp>

#include <vector>

namespace escrowsim {

// Bitcoin merkle rule: pair adjacent digests, double-SHA-256 each
// concatenation, duplicate the last element of an odd-length level.
// Throws on an empty list (a block has at least one transaction).
Hash256 merkle_root(const std::vector<Hash256>& txids);

struct ProofStep {
    Hash256 digest{};
    bool sibling_on_left = false; // fold as dsha(sibling || acc) when set
    bool operator==(const ProofStep&) const = default;
};

struct MerkleProof {
    Hash256 leaf_txid{};
    std::vector<ProofStep> siblings;
    Hash256 block_hash{};

    Bytes serialize() const;
    static MerkleProof deserialize(ByteReader& r);

    bool operator==(const MerkleProof&) const = default;
};

// Proof for txid within txids; block_hash is carried through untouched.
// Throws if txid is not present.
MerkleProof build_proof(const std::vector<Hash256>& txids, const Hash256& txid,
                        const Hash256& block_hash);

// True iff folding leaf_txid through the siblings yields root.
bool verify_proof(const Hash256& root, const MerkleProof& proof);

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_MERKLE_H
