// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/nodesim/wire.hpp>
#include <escrowsim/support/errors.hpp>

#include <algorithm>
#include <sstream>

namespace escrowsim {

namespace {

std::string hex8(ByteSpan bytes)
{
    return to_hex(bytes.subspan(0, std::min<size_t>(4, bytes.size())));
}

struct TagVisitor {
    MsgTag operator()(const GetHeaders&) const { return MsgTag::GetHeaders; }
    MsgTag operator()(const HeadersMsg&) const { return MsgTag::Headers; }
    MsgTag operator()(const GetMerkleBlock&) const { return MsgTag::GetMerkleBlock; }
    MsgTag operator()(const MerkleBlockMsg&) const { return MsgTag::MerkleBlock; }
    MsgTag operator()(const NotFound&) const { return MsgTag::NotFound; }
    MsgTag operator()(const Hello&) const { return MsgTag::Hello; }
    MsgTag operator()(const CertMsg&) const { return MsgTag::Cert; }
    MsgTag operator()(const GetTx&) const { return MsgTag::GetTx; }
    MsgTag operator()(const TxInfoMsg&) const { return MsgTag::TxInfo; }
};

} // namespace

MsgTag message_tag(const PeerMessage& msg)
{
    return std::visit(TagVisitor{}, msg);
}

const char* message_name(const PeerMessage& msg)
{
    switch (message_tag(msg)) {
    case MsgTag::GetHeaders: return "GetHeaders";
    case MsgTag::Headers: return "Headers";
    case MsgTag::GetMerkleBlock: return "GetMerkleBlock";
    case MsgTag::MerkleBlock: return "MerkleBlock";
    case MsgTag::NotFound: return "NotFound";
    case MsgTag::Hello: return "Hello";
    case MsgTag::Cert: return "Cert";
    case MsgTag::GetTx: return "GetTx";
    case MsgTag::TxInfo: return "TxInfo";
    }
    return "Unknown";
}

std::string message_summary(const PeerMessage& msg)
{
    std::ostringstream out;
    out << message_name(msg);
    if (const auto* m = std::get_if<GetHeaders>(&msg)) {
        out << " from=" << hex8(m->from_hash);
    } else if (const auto* m = std::get_if<HeadersMsg>(&msg)) {
        out << " count=" << m->headers.size();
        if (!m->headers.empty()) out << " tip=" << hex8(m->headers.back().hash());
    } else if (const auto* m = std::get_if<GetMerkleBlock>(&msg)) {
        out << " txid=" << hex8(m->txid);
    } else if (const auto* m = std::get_if<MerkleBlockMsg>(&msg)) {
        out << " txid=" << hex8(m->tx.txid()) << " block=" << hex8(m->header.hash());
    } else if (const auto* m = std::get_if<CertMsg>(&msg)) {
        out << " subject=" << m->cert.subject;
    } else if (const auto* m = std::get_if<GetTx>(&msg)) {
        out << " wallet=" << hex8(m->wallet) << " txid=" << hex8(m->txid);
    } else if (const auto* m = std::get_if<TxInfoMsg>(&msg)) {
        out << " found=" << (m->found ? 1 : 0) << " confirmations=" << m->confirmations;
    }
    return out.str();
}

Bytes serialize_message(const PeerMessage& msg)
{
    ByteWriter w;
    w.u8(uint8_t(message_tag(msg)));
    if (const auto* m = std::get_if<GetHeaders>(&msg)) {
        w.raw(m->from_hash);
    } else if (const auto* m = std::get_if<HeadersMsg>(&msg)) {
        w.u32(uint32_t(m->headers.size()));
        for (const BlockHeader& h : m->headers) w.raw(h.serialize());
    } else if (const auto* m = std::get_if<GetMerkleBlock>(&msg)) {
        w.raw(m->txid);
    } else if (const auto* m = std::get_if<MerkleBlockMsg>(&msg)) {
        w.raw(m->header.serialize());
        w.raw(m->proof.serialize());
        w.raw(m->tx.serialize());
    } else if (const auto* m = std::get_if<Hello>(&msg)) {
        w.raw(m->challenge);
    } else if (const auto* m = std::get_if<CertMsg>(&msg)) {
        w.raw(m->cert.serialize());
        w.raw(m->possession); // fixed 64 bytes
    } else if (const auto* m = std::get_if<GetTx>(&msg)) {
        w.raw(m->wallet);
        w.raw(m->txid);
    } else if (const auto* m = std::get_if<TxInfoMsg>(&msg)) {
        w.u8(m->found ? 1 : 0);
        w.raw(m->tx.serialize());
        w.u32(m->confirmations);
        w.raw(m->signature); // fixed 64 bytes
    }
    return w.take();
}

PeerMessage parse_message(ByteSpan frame)
{
    ByteReader r(frame);
    uint8_t tag = r.u8("message tag");
    PeerMessage msg;
    switch (MsgTag(tag)) {
    case MsgTag::GetHeaders:
        msg = GetHeaders{r.arr<32>("from hash")};
        break;
    case MsgTag::Headers: {
        HeadersMsg m;
        uint32_t count = r.u32("header count");
        m.headers.reserve(count);
        for (uint32_t i = 0; i < count; ++i)
            m.headers.push_back(BlockHeader::deserialize(r.raw(HEADER_SIZE, "header")));
        msg = std::move(m);
        break;
    }
    case MsgTag::GetMerkleBlock:
        msg = GetMerkleBlock{r.arr<32>("txid")};
        break;
    case MsgTag::MerkleBlock: {
        MerkleBlockMsg m;
        m.header = BlockHeader::deserialize(r.raw(HEADER_SIZE, "header"));
        m.proof = MerkleProof::deserialize(r);
        m.tx = Transaction::deserialize(r);
        msg = std::move(m);
        break;
    }
    case MsgTag::NotFound:
        msg = NotFound{};
        break;
    case MsgTag::Hello:
        msg = Hello{r.arr<32>("challenge")};
        break;
    case MsgTag::Cert: {
        CertMsg m;
        m.cert = Certificate::deserialize(r);
        ByteSpan sig = r.raw(ED25519_SIG_SIZE, "possession signature");
        m.possession.assign(sig.begin(), sig.end());
        msg = std::move(m);
        break;
    }
    case MsgTag::GetTx: {
        GetTx m;
        m.wallet = r.arr<20>("wallet");
        m.txid = r.arr<32>("txid");
        msg = m;
        break;
    }
    case MsgTag::TxInfo: {
        TxInfoMsg m;
        m.found = r.u8("found flag") != 0;
        m.tx = Transaction::deserialize(r);
        m.confirmations = r.u32("confirmations");
        ByteSpan sig = r.raw(ED25519_SIG_SIZE, "answer signature");
        m.signature.assign(sig.begin(), sig.end());
        msg = std::move(m);
        break;
    }
    default:
        throw ParseError("unknown message tag " + std::to_string(tag));
    }
    r.expect_done("message");
    return msg;
}

} // namespace escrowsim
