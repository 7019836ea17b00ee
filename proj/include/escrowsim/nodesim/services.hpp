// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_SERVICES_H
#define ESCROWSIM_NODESIM_SERVICES_H

#include <escrowsim/chainkit/chain.hpp>
#include <escrowsim/nodesim/identity.hpp>
#include <escrowsim/nodesim/transport.hpp>
#include <escrowsim/nodesim/wire.hpp>

#include <optional>
#include <string>
#include <thread>

namespace escrowsim {

// What a peer serves. Honest and adversarial peers run the same code; the
// chain snapshot is the behavior. No snapshot means every connection is
// dropped unanswered.
struct PeerBehavior {
    std::optional<Chain> chain;

    static PeerBehavior honest(Chain chain) { return {std::move(chain)}; }
    static PeerBehavior unavailable() { return {}; }
};

// Answers GetHeaders and GetMerkleBlock on a background thread, one
// connection at a time, until stop().
class PeerService {
public:
    PeerService(PeerBehavior behavior, const std::string& endpoint);
    ~PeerService();

    PeerService(const PeerService&) = delete;
    PeerService& operator=(const PeerService&) = delete;

    std::string endpoint() const { return m_endpoint; }
    void stop();

private:
    void run();
    PeerMessage handle(const PeerMessage& request) const;

    PeerBehavior m_behavior;
    ListenerPtr m_listener;
    std::string m_endpoint;
    std::thread m_thread;
};

// An explorer's certified channel identity.
struct ExplorerIdentity {
    Ed25519KeyPair key;
    Certificate cert;
};

ExplorerIdentity make_explorer_identity(const Ed25519KeyPair& anchor, std::string subject,
                                        Ed25519KeyPair endpoint_key);

// What an explorer answers. An honest explorer reads its snapshot; a lying
// one vouches for a scripted transaction at a scripted depth no matter what
// any chain says.
struct ExplorerBehavior {
    std::optional<Chain> chain;
    std::optional<Transaction> vouched;
    uint32_t vouched_confirmations = 0;

    static ExplorerBehavior honest(Chain chain)
    {
        ExplorerBehavior b;
        b.chain = std::move(chain);
        return b;
    }
    static ExplorerBehavior lying(Transaction vouched, uint32_t confirmations)
    {
        ExplorerBehavior b;
        b.vouched = std::move(vouched);
        b.vouched_confirmations = confirmations;
        return b;
    }
    static ExplorerBehavior unavailable() { return {}; }
};

// Runs the certified explorer protocol: Hello -> Cert with a possession
// signature, then GetTx -> TxInfo with every answer signed under the
// certified key and bound to the connection challenge.
class ExplorerService {
public:
    ExplorerService(ExplorerBehavior behavior, ExplorerIdentity identity,
                    const std::string& endpoint);
    ~ExplorerService();

    ExplorerService(const ExplorerService&) = delete;
    ExplorerService& operator=(const ExplorerService&) = delete;

    std::string endpoint() const { return m_endpoint; }
    const Certificate& certificate() const { return m_identity.cert; }
    void stop();

private:
    void run();
    void serve(Stream& stream) const;
    TxInfoMsg answer(const GetTx& query, const Hash256& challenge) const;

    ExplorerBehavior m_behavior;
    ExplorerIdentity m_identity;
    ListenerPtr m_listener;
    std::string m_endpoint;
    std::thread m_thread;
};

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_SERVICES_H
