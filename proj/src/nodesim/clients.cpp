// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/nodesim/clients.hpp>

#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/nodesim/transport.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

PeerMessage parse_reply(const Bytes& frame)
{
    try {
        return parse_message(frame);
    } catch (const ParseError& e) {
        throw TransportError(std::string("malformed reply: ") + e.what());
    }
}

} // namespace

PeerMessage PeerClient::exchange(const PeerMessage& request)
{
    StreamPtr stream = connect(m_endpoint);
    if (m_log) m_log->sent("peer", request);
    stream->send(serialize_message(request));
    PeerMessage reply = parse_reply(stream->recv());
    if (m_log) m_log->received("peer", reply);
    return reply;
}

std::vector<BlockHeader> PeerClient::get_headers(const Hash256& from_hash)
{
    PeerMessage reply = exchange(GetHeaders{from_hash});
    if (auto* headers = std::get_if<HeadersMsg>(&reply)) return std::move(headers->headers);
    throw TransportError(std::string("unexpected reply: ") + message_name(reply));
}

std::optional<MerkleBlockAnswer> PeerClient::get_merkle_block(const Hash256& txid)
{
    PeerMessage reply = exchange(GetMerkleBlock{txid});
    if (auto* mb = std::get_if<MerkleBlockMsg>(&reply))
        return MerkleBlockAnswer{mb->header, std::move(mb->proof), std::move(mb->tx)};
    if (std::get_if<NotFound>(&reply)) return std::nullopt;
    throw TransportError(std::string("unexpected reply: ") + message_name(reply));
}

ExplorerTxInfo ExplorerClient::get_tx(const Hash160& wallet, const Hash256& txid)
{
    StreamPtr stream = connect(m_endpoint);

    const Hash256 challenge = random_hash256();
    const PeerMessage hello = Hello{challenge};
    if (m_log) m_log->sent("explorer", hello);
    stream->send(serialize_message(hello));

    PeerMessage reply = parse_reply(stream->recv());
    if (m_log) m_log->received("explorer", reply);
    auto* cert_msg = std::get_if<CertMsg>(&reply);
    if (!cert_msg) throw TransportError(std::string("unexpected reply: ") + message_name(reply));
    const Certificate cert = std::move(cert_msg->cert); // reply is reused below
    if (!m_anchors.trusts(cert))
        throw UntrustedEndpointError("certificate does not chain to a pinned anchor");
    if (!ed25519_verify(cert.pubkey, possession_message(challenge, cert), cert_msg->possession))
        throw UntrustedEndpointError("endpoint failed to prove key possession");

    const PeerMessage query = GetTx{wallet, txid};
    if (m_log) m_log->sent("explorer", query);
    stream->send(serialize_message(query));

    reply = parse_reply(stream->recv());
    if (m_log) m_log->received("explorer", reply);
    auto* info = std::get_if<TxInfoMsg>(&reply);
    if (!info) throw TransportError(std::string("unexpected reply: ") + message_name(reply));
    if (!ed25519_verify(cert.pubkey,
                        answer_message(challenge, info->found, info->tx, info->confirmations),
                        info->signature))
        throw UntrustedEndpointError("answer signature does not verify");

    return ExplorerTxInfo{info->found, std::move(info->tx), info->confirmations};
}

} // namespace escrowsim
