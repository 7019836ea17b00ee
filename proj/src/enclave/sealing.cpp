// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/kdf.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/enclave/sealing.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

const char SEAL_SALT[] = "ESCROWSIM-SEAL";

} // namespace

Bytes SealedBlob::serialize() const
{
    ByteWriter w;
    w.str8(label);
    w.u8(uint8_t(nonce.size()));
    w.raw(nonce);
    w.u32(uint32_t(body.size()));
    w.raw(body);
    return w.take();
}

SealedBlob SealedBlob::deserialize(ByteReader& r)
{
    SealedBlob blob;
    blob.label = r.str8("sealed blob label");
    uint8_t nonce_len = r.u8("sealed blob nonce length");
    if (nonce_len < 12 || nonce_len > 24) throw ParseError("sealed blob nonce length out of range");
    ByteSpan nonce = r.raw(nonce_len, "sealed blob nonce");
    blob.nonce.assign(nonce.begin(), nonce.end());
    uint32_t body_len = r.u32("sealed blob body length");
    ByteSpan body = r.raw(body_len, "sealed blob body");
    blob.body.assign(body.begin(), body.end());
    return blob;
}

SealedBlob SealedBlob::deserialize(ByteSpan data)
{
    ByteReader r(data);
    SealedBlob blob = deserialize(r);
    r.expect_done("sealed blob");
    return blob;
}

Bytes derive_seal_key(const DeviceSecret& device, std::string_view label)
{
    return hkdf_sha256(device.bytes(), to_bytes(SEAL_SALT), to_bytes(label), AEAD_KEY_SIZE);
}

SealedBlob seal(const DeviceSecret& device, std::string_view label, ByteSpan plaintext)
{
    SealedBlob blob;
    blob.label = std::string(label);
    blob.nonce = random_bytes(AEAD_NONCE_SIZE);
    Bytes key = derive_seal_key(device, label);
    blob.body = aead_seal(key, blob.nonce, to_bytes(label), plaintext);
    return blob;
}

SecureBytes unseal(const DeviceSecret& device, const SealedBlob& blob)
{
    Bytes key = derive_seal_key(device, blob.label);
    return SecureBytes(aead_open(key, blob.nonce, to_bytes(blob.label), blob.body));
}

} // namespace escrowsim
