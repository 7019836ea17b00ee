// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/chainkit/mine.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/u256.hpp>

namespace escrowsim {

MineOutcome mine(BlockHeader tmpl, uint64_t max_iters)
{
    const U256 target = U256::from_compact(tmpl.bits);
    Bytes image = tmpl.serialize();
    MineOutcome out;
    uint32_t nonce = tmpl.pow_nonce;
    for (uint64_t i = 0; i < max_iters; ++i, ++nonce) {
        // Patch the trailing 4 nonce bytes instead of reserializing.
        for (int b = 0; b < 4; ++b) image[76 + b] = uint8_t(nonce >> (8 * b));
        ++out.attempts;
        if (U256::from_le_bytes(double_sha256(image)) <= target) {
            tmpl.pow_nonce = nonce;
            out.header = tmpl;
            return out;
        }
    }
    return out;
}

MinedBlock mine_block(const Hash256& prev_hash, std::vector<Transaction> txs, uint32_t timestamp,
                      uint32_t bits, uint64_t max_iters)
{
    Block b;
    b.txs = std::move(txs);
    b.header.version = 1;
    b.header.prev_hash = prev_hash;
    b.header.merkle_root = merkle_root(b.txids());
    b.header.timestamp = timestamp;
    b.header.bits = bits;
    MineOutcome out = mine(b.header, max_iters);
    if (!out.header)
        throw ValidationError("mining exhausted after " + std::to_string(out.attempts) + " attempts");
    b.header = *out.header;
    return {std::move(b), out.attempts};
}

FakeChainResult mine_fake_chain(const Hash256& checkpoint_hash, uint64_t checkpoint_height,
                                const Transaction& payment_tx, uint64_t n_extra, uint32_t bits,
                                SimClock clock, uint64_t max_iters)
{
    FakeChainResult result;
    Hash256 prev = checkpoint_hash;
    for (uint64_t i = 0; i <= n_extra; ++i) {
        std::vector<Transaction> txs;
        if (i == 0) {
            txs.push_back(payment_tx);
        } else {
            txs.push_back(make_marker_tx(checkpoint_height + 1 + i));
        }
        MinedBlock mined = mine_block(prev, std::move(txs), clock.tick(), bits, max_iters);
        result.total_attempts += mined.attempts;
        prev = mined.block.header.hash();
        result.blocks.push_back(std::move(mined.block));
    }
    return result;
}

} // namespace escrowsim
