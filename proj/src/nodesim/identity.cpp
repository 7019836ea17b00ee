// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/nodesim/identity.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <cstring>
#include <sstream>

namespace escrowsim {

namespace {

constexpr char CERT_CONTEXT[] = "ESCROWSIM-CERT";
constexpr char POSSESS_CONTEXT[] = "ESCROWSIM-POSSESS";
constexpr char ANSWER_CONTEXT[] = "ESCROWSIM-ANSWER";

void put_context(ByteWriter& w, const char* context)
{
    w.raw(ByteSpan(reinterpret_cast<const uint8_t*>(context), std::strlen(context) + 1));
}

} // namespace

Bytes Certificate::signed_body() const
{
    ByteWriter w;
    put_context(w, CERT_CONTEXT);
    w.str8(subject);
    w.raw(pubkey);
    return w.take();
}

Bytes Certificate::serialize() const
{
    ByteWriter w;
    w.str8(subject);
    w.raw(pubkey);
    w.raw(issuer_fp);
    w.raw(signature);
    return w.take();
}

Certificate Certificate::deserialize(ByteReader& r)
{
    Certificate cert;
    cert.subject = r.str8("certificate subject");
    ByteSpan pub = r.raw(CURVE25519_KEY_SIZE, "certificate key");
    cert.pubkey.assign(pub.begin(), pub.end());
    cert.issuer_fp = r.arr<20>("certificate issuer");
    ByteSpan sig = r.raw(ED25519_SIG_SIZE, "certificate signature");
    cert.signature.assign(sig.begin(), sig.end());
    return cert;
}

Certificate issue_certificate(const Ed25519KeyPair& anchor, std::string subject,
                              ByteSpan endpoint_pub)
{
    Certificate cert;
    cert.subject = std::move(subject);
    cert.pubkey.assign(endpoint_pub.begin(), endpoint_pub.end());
    cert.issuer_fp = fingerprint20(anchor.pub);
    cert.signature = ed25519_sign(anchor.priv.span(), cert.signed_body());
    return cert;
}

void TrustAnchors::add(ByteSpan anchor_pub)
{
    if (anchor_pub.size() != CURVE25519_KEY_SIZE)
        throw ValidationError("trust anchor must be a 32-byte key");
    m_anchors.emplace_back(anchor_pub.begin(), anchor_pub.end());
}

bool TrustAnchors::trusts(const Certificate& cert) const
{
    for (const Bytes& anchor : m_anchors) {
        if (fingerprint20(anchor) != cert.issuer_fp) continue;
        if (ed25519_verify(anchor, cert.signed_body(), cert.signature)) return true;
    }
    return false;
}

void TrustAnchors::save(const std::filesystem::path& path) const
{
    std::string text;
    for (const Bytes& anchor : m_anchors) text += to_hex(anchor) + "\n";
    write_file(path, ByteSpan(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

TrustAnchors TrustAnchors::load(const std::filesystem::path& path)
{
    Bytes raw = read_file(path);
    std::istringstream in(std::string(raw.begin(), raw.end()));
    TrustAnchors anchors;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        anchors.add(from_hex(line));
    }
    return anchors;
}

Bytes possession_message(const Hash256& challenge, const Certificate& cert)
{
    ByteWriter w;
    put_context(w, POSSESS_CONTEXT);
    w.raw(challenge);
    w.raw(cert.serialize());
    return w.take();
}

Bytes answer_message(const Hash256& challenge, bool found, const Transaction& tx,
                     uint32_t confirmations)
{
    ByteWriter w;
    put_context(w, ANSWER_CONTEXT);
    w.raw(challenge);
    w.u8(found ? 1 : 0);
    w.raw(tx.serialize());
    w.u32(confirmations);
    return w.take();
}

} // namespace escrowsim
