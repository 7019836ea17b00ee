// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/chain.hpp>
#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

std::vector<Hash256> Block::txids() const
{
    std::vector<Hash256> ids;
    ids.reserve(txs.size());
    for (const Transaction& tx : txs) ids.push_back(tx.txid());
    return ids;
}

Transaction make_marker_tx(uint64_t height)
{
    ByteWriter w;
    w.raw(to_bytes("blk:"));
    w.u64(height);
    Transaction tx;
    tx.outputs.push_back(Output{0, OpReturn{w.take()}});
    return tx;
}

void validate_block(const Block& b, const Hash256& expected_prev)
{
    if (b.header.prev_hash != expected_prev)
        throw ValidationError("block does not extend the expected tip");
    if (!b.header.meets_target())
        throw ValidationError("block header fails its proof-of-work target");
    if (b.txs.empty())
        throw ValidationError("block has no transactions");
    for (const Transaction& tx : b.txs)
        if (!tx.well_formed())
            throw ValidationError("block contains a malformed transaction");
    if (merkle_root(b.txids()) != b.header.merkle_root)
        throw ValidationError("block body does not match the header merkle root");
}

Chain Chain::genesis(uint32_t bits, uint32_t timestamp)
{
    Block g;
    g.txs.push_back(make_marker_tx(0));
    g.header.version = 1;
    g.header.merkle_root = merkle_root(g.txids());
    g.header.timestamp = timestamp;
    g.header.bits = bits;
    while (!g.header.meets_target()) ++g.header.pow_nonce;
    return Chain({std::move(g)});
}

Chain Chain::from_blocks(std::vector<Block> blocks)
{
    if (blocks.empty()) throw ValidationError("chain must contain a genesis block");
    Hash256 prev{};
    for (const Block& b : blocks) {
        validate_block(b, prev);
        prev = b.header.hash();
    }
    return Chain(std::move(blocks));
}

Chain Chain::with_block(Block b) const
{
    validate_block(b, tip().header.hash());
    std::vector<Block> next = m_blocks;
    next.push_back(std::move(b));
    return Chain(std::move(next));
}

std::optional<size_t> Chain::find_block(const Hash256& block_hash) const
{
    for (size_t i = 0; i < m_blocks.size(); ++i)
        if (m_blocks[i].header.hash() == block_hash) return i;
    return std::nullopt;
}

std::optional<size_t> Chain::find_tx(const Hash256& txid) const
{
    for (size_t i = 0; i < m_blocks.size(); ++i)
        for (const Transaction& tx : m_blocks[i].txs)
            if (tx.txid() == txid) return i;
    return std::nullopt;
}

const Transaction* Chain::get_tx(const Hash256& txid) const
{
    for (const Block& b : m_blocks)
        for (const Transaction& tx : b.txs)
            if (tx.txid() == txid) return &tx;
    return nullptr;
}

uint64_t Chain::confirmations(const Hash256& txid) const
{
    std::optional<size_t> h = find_tx(txid);
    if (!h) return 0;
    return height() - *h + 1;
}

} // namespace escrowsim
