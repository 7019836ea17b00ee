// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/release/chain_source.hpp>

namespace escrowsim {

std::vector<BlockHeader> ChainHeaderSource::get_headers(const Hash256& from_hash)
{
    std::optional<size_t> from = m_chain.find_block(from_hash);
    if (!from) return {};
    std::vector<BlockHeader> headers;
    for (size_t h = *from + 1; h <= m_chain.height(); ++h)
        headers.push_back(m_chain.at(h).header);
    return headers;
}

std::optional<MerkleBlockAnswer> ChainHeaderSource::get_merkle_block(const Hash256& txid)
{
    std::optional<size_t> height = m_chain.find_tx(txid);
    if (!height) return std::nullopt;
    const Block& block = m_chain.at(*height);
    MerkleBlockAnswer answer;
    answer.header = block.header;
    answer.proof = build_proof(block.txids(), txid, block.header.hash());
    answer.tx = *m_chain.get_tx(txid);
    return answer;
}

ExplorerTxInfo ChainExplorerSource::get_tx(const Hash160&, const Hash256& txid)
{
    ExplorerTxInfo info;
    const Transaction* tx = m_chain.get_tx(txid);
    if (!tx) return info;
    info.found = true;
    info.tx = *tx;
    info.confirmations = uint32_t(m_chain.confirmations(txid));
    return info;
}

} // namespace escrowsim
