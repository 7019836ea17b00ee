// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_IDENTITY_H
#define ESCROWSIM_NODESIM_IDENTITY_H

#include <escrowsim/chainkit/transaction.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/support/bytes.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace escrowsim {

// One-level endpoint certificate: a trust anchor signs (subject, key). The
// stand-in for the paper's pre-seeded SSL certificate store.
struct Certificate {
    std::string subject;
    Bytes pubkey;        // endpoint ed25519 key, 32 bytes
    Hash160 issuer_fp{}; // fingerprint20 of the anchor public key
    Bytes signature;     // anchor signature over signed_body()

    Bytes signed_body() const;
    Bytes serialize() const;
    static Certificate deserialize(ByteReader& r);

    bool operator==(const Certificate&) const = default;
};

Certificate issue_certificate(const Ed25519KeyPair& anchor, std::string subject,
                              ByteSpan endpoint_pub);

// The client's pinned anchor set. File format: one anchor public key per
// line, hex.
class TrustAnchors {
public:
    void add(ByteSpan anchor_pub);
    bool trusts(const Certificate& cert) const;
    size_t size() const { return m_anchors.size(); }

    void save(const std::filesystem::path& path) const;
    static TrustAnchors load(const std::filesystem::path& path);

private:
    std::vector<Bytes> m_anchors;
};

// Channel-binding messages the endpoint signs with its certified key: one
// proving key possession at handshake, one covering each answer.
Bytes possession_message(const Hash256& challenge, const Certificate& cert);
Bytes answer_message(const Hash256& challenge, bool found, const Transaction& tx,
                     uint32_t confirmations);

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_IDENTITY_H
