// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/release/protocol.hpp>
#include <escrowsim/support/errors.hpp>

#include <algorithm>
#include <map>

namespace escrowsim {

Bytes ReleaseMetadata::serialize() const
{
    ByteWriter w;
    w.u8(METADATA_TAG);
    w.raw(ak_fp);
    w.raw(vk_fp);
    w.raw(nonce);
    return w.take();
}

std::optional<ReleaseMetadata> ReleaseMetadata::parse(ByteSpan payload)
{
    if (payload.size() != METADATA_SIZE || payload[0] != METADATA_TAG) return std::nullopt;
    ReleaseMetadata md;
    std::copy_n(payload.begin() + 1, 20, md.ak_fp.begin());
    std::copy_n(payload.begin() + 21, 20, md.vk_fp.begin());
    std::copy_n(payload.begin() + 41, 32, md.nonce.begin());
    return md;
}

Hash160 wallet_from_key(ByteSpan key_bytes)
{
    Hash256 digest = double_sha256(key_bytes);
    Hash160 address;
    std::copy_n(digest.begin(), address.size(), address.begin());
    return address;
}

std::vector<PaymentHit> attacker_scan(const Chain& chain, ByteSpan ak_pub_der)
{
    Hash160 ak_fp = fingerprint20(ak_pub_der);
    Hash160 wallet = wallet_from_key(ak_pub_der);

    std::vector<PaymentHit> hits;
    for (size_t h = 0; h <= chain.height(); ++h) {
        for (const Transaction& tx : chain.at(h).txs) {
            std::optional<ByteSpan> payload = tx.op_return();
            if (!payload) continue;
            std::optional<ReleaseMetadata> md = ReleaseMetadata::parse(*payload);
            if (!md || md->ak_fp != ak_fp) continue;
            uint64_t paid = 0;
            for (const Output& out : tx.outputs)
                if (const auto* pay = std::get_if<PayToAddress>(&out.script);
                    pay && pay->address == wallet)
                    paid += out.amount;
            if (paid == 0) continue;
            hits.push_back(PaymentHit{tx.txid(), paid, *md});
        }
    }
    return hits;
}

Bytes attacker_sign(const ReleaseMetadata& md, const RsaKeyPair& ak)
{
    return ak.sign(md.serialize());
}

std::vector<Transaction> publish_signature(ByteSpan signature, const Hash160& vk_fp)
{
    if (signature.empty()) throw ValidationError("cannot publish an empty signature");
    size_t total = (signature.size() + SIGNATURE_CHUNK_CAPACITY - 1) / SIGNATURE_CHUNK_CAPACITY;
    if (total > 255)
        throw ValidationError("signature too large for 255 OP_RETURN chunks: " +
                              std::to_string(signature.size()) + " bytes");

    std::vector<Transaction> txs;
    for (size_t i = 0; i < total; ++i) {
        size_t off = i * SIGNATURE_CHUNK_CAPACITY;
        size_t n = std::min(SIGNATURE_CHUNK_CAPACITY, signature.size() - off);
        ByteWriter w;
        w.u8(SIGNATURE_CHUNK_TAG);
        w.raw(vk_fp);
        w.u8(uint8_t(i));
        w.u8(uint8_t(total));
        w.raw(signature.subspan(off, n));
        Transaction tx;
        tx.outputs.push_back(Output{0, OpReturn{w.take()}});
        txs.push_back(std::move(tx));
    }
    return txs;
}

std::optional<Bytes> find_signature(const Chain& chain, const Hash160& vk_fp)
{
    std::map<uint8_t, Bytes> parts;
    uint8_t total = 0;
    for (size_t h = 0; h <= chain.height(); ++h) {
        for (const Transaction& tx : chain.at(h).txs) {
            std::optional<ByteSpan> payload = tx.op_return();
            if (!payload || payload->size() <= SIGNATURE_CHUNK_HEADER) continue;
            ByteSpan p = *payload;
            if (p[0] != SIGNATURE_CHUNK_TAG) continue;
            if (!std::equal(vk_fp.begin(), vk_fp.end(), p.begin() + 1)) continue;
            uint8_t idx = p[21];
            uint8_t n = p[22];
            if (n == 0 || idx >= n) continue;
            if (total == 0) total = n;
            if (n != total) continue; // stray publish with a different shape
            parts.emplace(idx, Bytes(p.begin() + SIGNATURE_CHUNK_HEADER, p.end()));
        }
    }
    if (total == 0 || parts.size() != total) return std::nullopt;
    Bytes signature;
    for (auto& [idx, part] : parts)
        signature.insert(signature.end(), part.begin(), part.end());
    return signature;
}

} // namespace escrowsim
