// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/nodesim/services.hpp>

#include <escrowsim/release/chain_source.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

PeerService::PeerService(PeerBehavior behavior, const std::string& endpoint)
    : m_behavior(std::move(behavior)), m_listener(listen(endpoint)),
      m_endpoint(m_listener->endpoint())
{
    m_thread = std::thread([this] { run(); });
}

PeerService::~PeerService()
{
    stop();
}

void PeerService::stop()
{
    m_listener->stop();
    if (m_thread.joinable()) m_thread.join();
}

void PeerService::run()
{
    while (true) {
        StreamPtr stream;
        try {
            stream = m_listener->accept();
        } catch (const TransportError&) {
            return; // stopped
        }
        if (!m_behavior.chain) continue; // drop unanswered
        try {
            while (true) {
                const PeerMessage request = parse_message(stream->recv());
                stream->send(serialize_message(handle(request)));
            }
        } catch (const TransportError&) {
            // client closed or timed out; next connection
        } catch (const ParseError&) {
            // garbage on the wire; drop the connection
        }
    }
}

PeerMessage PeerService::handle(const PeerMessage& request) const
{
    ChainHeaderSource source(*m_behavior.chain);
    if (const auto* gh = std::get_if<GetHeaders>(&request))
        return HeadersMsg{source.get_headers(gh->from_hash)};
    if (const auto* gmb = std::get_if<GetMerkleBlock>(&request)) {
        auto answer = source.get_merkle_block(gmb->txid);
        if (!answer) return NotFound{};
        return MerkleBlockMsg{answer->header, std::move(answer->proof), std::move(answer->tx)};
    }
    return NotFound{};
}

ExplorerIdentity make_explorer_identity(const Ed25519KeyPair& anchor, std::string subject,
                                        Ed25519KeyPair endpoint_key)
{
    Certificate cert = issue_certificate(anchor, std::move(subject), endpoint_key.pub);
    return ExplorerIdentity{std::move(endpoint_key), std::move(cert)};
}

ExplorerService::ExplorerService(ExplorerBehavior behavior, ExplorerIdentity identity,
                                 const std::string& endpoint)
    : m_behavior(std::move(behavior)), m_identity(std::move(identity)),
      m_listener(listen(endpoint)), m_endpoint(m_listener->endpoint())
{
    m_thread = std::thread([this] { run(); });
}

ExplorerService::~ExplorerService()
{
    stop();
}

void ExplorerService::stop()
{
    m_listener->stop();
    if (m_thread.joinable()) m_thread.join();
}

void ExplorerService::run()
{
    while (true) {
        StreamPtr stream;
        try {
            stream = m_listener->accept();
        } catch (const TransportError&) {
            return; // stopped
        }
        const bool up = m_behavior.chain || m_behavior.vouched;
        if (!up) continue; // drop unanswered
        try {
            serve(*stream);
        } catch (const TransportError&) {
        } catch (const ParseError&) {
        }
    }
}

void ExplorerService::serve(Stream& stream) const
{
    const PeerMessage first = parse_message(stream.recv());
    const auto* hello = std::get_if<Hello>(&first);
    if (!hello) return; // protocol violation; drop
    const Hash256 challenge = hello->challenge;

    const Bytes possession =
        ed25519_sign(m_identity.key.priv.span(), possession_message(challenge, m_identity.cert));
    stream.send(serialize_message(CertMsg{m_identity.cert, possession}));

    while (true) {
        const PeerMessage request = parse_message(stream.recv());
        const auto* query = std::get_if<GetTx>(&request);
        if (!query) return;
        stream.send(serialize_message(answer(*query, challenge)));
    }
}

TxInfoMsg ExplorerService::answer(const GetTx& query, const Hash256& challenge) const
{
    TxInfoMsg info;
    if (m_behavior.vouched && m_behavior.vouched->txid() == query.txid) {
        info.found = true;
        info.tx = *m_behavior.vouched;
        info.confirmations = m_behavior.vouched_confirmations;
    } else if (m_behavior.chain) {
        if (const Transaction* tx = m_behavior.chain->get_tx(query.txid)) {
            info.found = true;
            info.tx = *tx;
            info.confirmations = static_cast<uint32_t>(m_behavior.chain->confirmations(query.txid));
        }
    }
    info.signature = ed25519_sign(m_identity.key.priv.span(),
                                  answer_message(challenge, info.found, info.tx,
                                                 info.confirmations));
    return info;
}

} // namespace escrowsim
