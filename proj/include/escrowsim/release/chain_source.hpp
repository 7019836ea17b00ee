// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_RELEASE_CHAIN_SOURCE_H
#define ESCROWSIM_RELEASE_CHAIN_SOURCE_H

#include <escrowsim/chainkit/chain.hpp>
#include <escrowsim/release/verifier.hpp>

namespace escrowsim {

// Honest in-process peer: answers straight from an immutable chain snapshot.
// Serving a forged chain makes this the adversarial peer too; the snapshot
// is the behavior.
class ChainHeaderSource : public HeaderSource {
public:
    explicit ChainHeaderSource(Chain chain) : m_chain(std::move(chain)) {}

    std::vector<BlockHeader> get_headers(const Hash256& from_hash) override;
    std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256& txid) override;

    const Chain& chain() const { return m_chain; }

private:
    Chain m_chain;
};

// Honest in-process explorer over the same snapshot.
class ChainExplorerSource : public ExplorerSource {
public:
    explicit ChainExplorerSource(Chain chain) : m_chain(std::move(chain)) {}

    ExplorerTxInfo get_tx(const Hash160& wallet, const Hash256& txid) override;

private:
    Chain m_chain;
};

} // namespace escrowsim

#endif // ESCROWSIM_RELEASE_CHAIN_SOURCE_H
