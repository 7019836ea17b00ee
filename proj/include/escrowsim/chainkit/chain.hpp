// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_CHAIN_H
#define ESCROWSIM_CHAINKIT_CHAIN_H

#include <escrowsim/chainkit/header.hpp>
#include <escrowsim/chainkit/transaction.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace escrowsim {

// Fixed-step clock for reproducible block timestamps.
struct SimClock {
    uint32_t now = 1700000000;
    uint32_t step = 600;

    uint32_t tick()
    {
        uint32_t t = now;
        now += step;
        return t;
    }
};

struct Block {
    BlockHeader header;
    std::vector<Transaction> txs;

    std::vector<Hash256> txids() const;
};

// Immutable snapshot of a block sequence. Appending returns a new snapshot;
// every constructor path validates linkage, proof-of-work, and body roots.
class Chain {
public:
    // All-zero prev_hash genesis at a configurable target, carrying one
    // OP_RETURN marker transaction.
    static Chain genesis(uint32_t bits, uint32_t timestamp);

    // Validates the whole sequence; throws ValidationError on any break.
    static Chain from_blocks(std::vector<Block> blocks);

    // New snapshot with b appended; validates b against the current tip.
    Chain with_block(Block b) const;

    const std::vector<Block>& blocks() const { return m_blocks; }
    size_t height() const { return m_blocks.size() - 1; }
    const Block& tip() const { return m_blocks.back(); }
    const Block& at(size_t height) const { return m_blocks.at(height); }

    std::optional<size_t> find_block(const Hash256& block_hash) const;

    // Height of the block containing txid, if any.
    std::optional<size_t> find_tx(const Hash256& txid) const;
    const Transaction* get_tx(const Hash256& txid) const;

    // tip_height - containing_height + 1; 0 when txid is absent.
    uint64_t confirmations(const Hash256& txid) const;

private:
    explicit Chain(std::vector<Block> blocks) : m_blocks(std::move(blocks)) {}

    std::vector<Block> m_blocks;
};

// Marker transaction embedding the block height, so filler blocks get
// distinct txids.
Transaction make_marker_tx(uint64_t height);

// Body-root and PoW check for a single block, linkage against prev.
void validate_block(const Block& b, const Hash256& expected_prev);

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_CHAIN_H
