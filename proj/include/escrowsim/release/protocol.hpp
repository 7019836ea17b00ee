// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_RELEASE_PROTOCOL_H
#define ESCROWSIM_RELEASE_PROTOCOL_H

#include <escrowsim/chainkit/chain.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/support/bytes.hpp>

#include <optional>
#include <vector>

namespace escrowsim {

// OP_RETURN record tags.
inline constexpr uint8_t METADATA_TAG = 0x01;
inline constexpr uint8_t SIGNATURE_CHUNK_TAG = 0x02;

// tag + two 20-byte key ids + 32-byte nonce. Full keys cannot fit the
// 80-byte OP_RETURN budget.
inline constexpr size_t METADATA_SIZE = 1 + 20 + 20 + 32;

// Signature chunk header: tag + vk id + index + total.
inline constexpr size_t SIGNATURE_CHUNK_HEADER = 1 + 20 + 1 + 1;
inline constexpr size_t SIGNATURE_CHUNK_CAPACITY = OP_RETURN_MAX - SIGNATURE_CHUNK_HEADER;

// The payment record a victim embeds next to the ransom payment: which
// attacker key it answers, which victim key it ransoms, and the enclave
// nonce that makes the eventual signature single-use.
struct ReleaseMetadata {
    Hash160 ak_fp{};
    Hash160 vk_fp{};
    Hash256 nonce{};

    Bytes serialize() const; // METADATA_SIZE bytes
    static std::optional<ReleaseMetadata> parse(ByteSpan payload);

    bool operator==(const ReleaseMetadata&) const = default;
};

// First 20 bytes of double-SHA-256 of the serialized key. Distinct from
// fingerprint20 so an address never doubles as a key id.
Hash160 wallet_from_key(ByteSpan key_bytes);

// A payment transaction the attacker accepts: OP_RETURN metadata naming the
// attacker key, plus an output paying the attacker-derived address.
struct PaymentHit {
    Hash256 txid{};
    uint64_t amount = 0;
    ReleaseMetadata metadata;
};

std::vector<PaymentHit> attacker_scan(const Chain& chain, ByteSpan ak_pub_der);

// RSA signature over SHA-256 of the canonical metadata serialization.
Bytes attacker_sign(const ReleaseMetadata& md, const RsaKeyPair& ak);

// Splits a signature into chained OP_RETURN transactions, each carrying
// tag | vk id | index | total | part. Throws when it cannot fit 255 parts.
std::vector<Transaction> publish_signature(ByteSpan signature, const Hash160& vk_fp);

// Victim-side scan: reassemble the signature published for vk_fp, or nullopt
// until every part is on chain.
std::optional<Bytes> find_signature(const Chain& chain, const Hash160& vk_fp);

} // namespace escrowsim

#endif // ESCROWSIM_RELEASE_PROTOCOL_H
