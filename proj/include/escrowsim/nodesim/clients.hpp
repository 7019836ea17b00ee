// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_CLIENTS_H
#define ESCROWSIM_NODESIM_CLIENTS_H

#include <escrowsim/nodesim/identity.hpp>
#include <escrowsim/nodesim/wire.hpp>
#include <escrowsim/release/verifier.hpp>

#include <string>
#include <vector>

namespace escrowsim {

// Transcript tap: one line per message, client's point of view. Summaries
// never include random values, so equal seeds give equal transcripts.
struct MessageLog {
    std::vector<std::string> lines;

    void sent(const std::string& who, const PeerMessage& msg)
    {
        lines.push_back("-> " + who + " " + message_summary(msg));
    }
    void received(const std::string& who, const PeerMessage& msg)
    {
        lines.push_back("<- " + who + " " + message_summary(msg));
    }
    void note(std::string line) { lines.push_back(std::move(line)); }
};

// HeaderSource over the wire; one connection per request. Transport and
// protocol failures surface as TransportError, which the verifiers map to
// endpoint-unavailable.
class PeerClient : public HeaderSource {
public:
    explicit PeerClient(std::string endpoint, MessageLog* log = nullptr)
        : m_endpoint(std::move(endpoint)), m_log(log) {}

    std::vector<BlockHeader> get_headers(const Hash256& from_hash) override;
    std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256& txid) override;

private:
    PeerMessage exchange(const PeerMessage& request);

    std::string m_endpoint;
    MessageLog* m_log;
};

// ExplorerSource over the certified channel. The client pins trust anchors;
// a certificate outside the pinned set, a bad possession proof, or a bad
// answer signature is UntrustedEndpointError.
class ExplorerClient : public ExplorerSource {
public:
    ExplorerClient(std::string endpoint, TrustAnchors anchors, MessageLog* log = nullptr)
        : m_endpoint(std::move(endpoint)), m_anchors(std::move(anchors)), m_log(log) {}

    ExplorerTxInfo get_tx(const Hash160& wallet, const Hash256& txid) override;

private:
    std::string m_endpoint;
    TrustAnchors m_anchors;
    MessageLog* m_log;
};

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_CLIENTS_H
