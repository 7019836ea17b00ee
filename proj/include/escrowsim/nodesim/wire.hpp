// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_WIRE_H
#define ESCROWSIM_NODESIM_WIRE_H

#include <escrowsim/chainkit/header.hpp>
#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/chainkit/transaction.hpp>
#include <escrowsim/nodesim/identity.hpp>

#include <string>
#include <variant>
#include <vector>

namespace escrowsim {

// Canonical binary messages. Tags 1-5 are the peer protocol, 6-9 the
// explorer protocol.
enum class MsgTag : uint8_t {
    GetHeaders = 1,
    Headers = 2,
    GetMerkleBlock = 3,
    MerkleBlock = 4,
    NotFound = 5,
    Hello = 6,
    Cert = 7,
    GetTx = 8,
    TxInfo = 9,
};

struct GetHeaders {
    Hash256 from_hash{};
};

struct HeadersMsg {
    std::vector<BlockHeader> headers;
};

struct GetMerkleBlock {
    Hash256 txid{};
};

struct MerkleBlockMsg {
    BlockHeader header;
    MerkleProof proof;
    Transaction tx;
};

struct NotFound {};

struct Hello {
    Hash256 challenge{};
};

struct CertMsg {
    Certificate cert;
    Bytes possession; // endpoint signature over possession_message
};

struct GetTx {
    Hash160 wallet{};
    Hash256 txid{};
};

struct TxInfoMsg {
    bool found = false;
    Transaction tx;
    uint32_t confirmations = 0;
    Bytes signature; // endpoint signature over answer_message
};

using PeerMessage = std::variant<GetHeaders, HeadersMsg, GetMerkleBlock, MerkleBlockMsg, NotFound,
                                 Hello, CertMsg, GetTx, TxInfoMsg>;

MsgTag message_tag(const PeerMessage& msg);
const char* message_name(const PeerMessage& msg);

// Name plus the identifying fields; hashes truncated. Stable across runs
// with the same seed, so transcripts can be compared verbatim.
std::string message_summary(const PeerMessage& msg);

Bytes serialize_message(const PeerMessage& msg);
PeerMessage parse_message(ByteSpan frame);

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_WIRE_H
