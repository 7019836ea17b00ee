// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_MINE_H
#define ESCROWSIM_CHAINKIT_MINE_H

#include <escrowsim/chainkit/chain.hpp>
#include <escrowsim/chainkit/header.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace escrowsim {

inline constexpr uint64_t DEFAULT_MINE_ITERS = uint64_t(1) << 40;

struct MineOutcome {
    std::optional<BlockHeader> header; // empty when exhausted
    uint64_t attempts = 0;             // hash evaluations performed
};

// Scans pow_nonce upward from the template's value until the header meets
// its target or max_iters attempts are spent.
MineOutcome mine(BlockHeader tmpl, uint64_t max_iters = DEFAULT_MINE_ITERS);

// Builds and mines one block with the given body on top of prev.
struct MinedBlock {
    Block block;
    uint64_t attempts = 0;
};
MinedBlock mine_block(const Hash256& prev_hash, std::vector<Transaction> txs, uint32_t timestamp,
                      uint32_t bits, uint64_t max_iters = DEFAULT_MINE_ITERS);

// The checkpoint-rooted forgery the confirmation policy has to price:
// 1 + n_extra freshly mined blocks on top of an arbitrary (hash, height)
// checkpoint, the first carrying payment_tx, the rest marker transactions.
struct FakeChainResult {
    std::vector<Block> blocks;
    uint64_t total_attempts = 0;
};
FakeChainResult mine_fake_chain(const Hash256& checkpoint_hash, uint64_t checkpoint_height,
                                const Transaction& payment_tx, uint64_t n_extra, uint32_t bits,
                                SimClock clock, uint64_t max_iters = DEFAULT_MINE_ITERS);

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_MINE_H
