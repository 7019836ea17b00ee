// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/chain_io.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

namespace escrowsim {

namespace {

ByteSpan chain_magic()
{
    // Includes the terminating NUL: 16 bytes on disk.
    return ByteSpan(reinterpret_cast<const uint8_t*>(CHAIN_MAGIC), sizeof(CHAIN_MAGIC));
}

} // namespace

Bytes serialize_chain(const Chain& chain)
{
    ByteWriter w;
    w.raw(chain_magic());
    w.u32(CHAIN_VERSION);
    w.u32(uint32_t(chain.blocks().size()));
    for (const Block& b : chain.blocks()) {
        w.raw(b.header.serialize());
        w.u32(uint32_t(b.txs.size()));
        for (const Transaction& tx : b.txs) w.raw(tx.serialize());
    }
    return w.take();
}

Chain deserialize_chain(ByteSpan data)
{
    ByteReader r(data);
    r.expect_magic(chain_magic(), "chain file magic");
    uint32_t version = r.u32("chain file version");
    if (version != CHAIN_VERSION)
        throw ParseError("unsupported chain file version " + std::to_string(version));
    uint32_t count = r.u32("chain block count");
    std::vector<Block> blocks;
    blocks.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        Block b;
        b.header = BlockHeader::deserialize(r.raw(HEADER_SIZE, "block header"));
        uint32_t txs = r.u32("block transaction count");
        for (uint32_t t = 0; t < txs; ++t) b.txs.push_back(Transaction::deserialize(r));
        blocks.push_back(std::move(b));
    }
    r.expect_done("chain file");
    return Chain::from_blocks(std::move(blocks));
}

void save_chain(const std::filesystem::path& path, const Chain& chain)
{
    write_file_atomic(path, serialize_chain(chain));
}

Chain load_chain(const std::filesystem::path& path)
{
    return deserialize_chain(read_file(path));
}

} // namespace escrowsim
