// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/support/errors.hpp>

#include <openssl/evp.h>

#include <memory>

namespace escrowsim {

namespace {

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

CipherCtx make_ctx()
{
    CipherCtx ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) throw CryptoError("EVP_CIPHER_CTX_new failed");
    return ctx;
}

void check_sizes(ByteSpan key, ByteSpan nonce)
{
    if (key.size() != AEAD_KEY_SIZE) throw ValidationError("AEAD key must be 32 bytes");
    if (nonce.size() != AEAD_NONCE_SIZE) throw ValidationError("AEAD nonce must be 12 bytes");
}

} // namespace

Bytes aead_seal(ByteSpan key, ByteSpan nonce, ByteSpan aad, ByteSpan plaintext)
{
    check_sizes(key, nonce);
    CipherCtx ctx = make_ctx();
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        throw CryptoError("GCM encrypt init failed");

    int len = 0;
    if (!aad.empty() && EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), int(aad.size())) != 1)
        throw CryptoError("GCM AAD failed");

    Bytes out(plaintext.size() + AEAD_TAG_SIZE);
    int ct_len = 0;
    if (!plaintext.empty()) {
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(), int(plaintext.size())) != 1)
            throw CryptoError("GCM encrypt failed");
        ct_len = len;
    }
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + ct_len, &len) != 1)
        throw CryptoError("GCM encrypt final failed");
    ct_len += len;
    if (size_t(ct_len) != plaintext.size()) throw CryptoError("GCM length mismatch");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, AEAD_TAG_SIZE, out.data() + ct_len) != 1)
        throw CryptoError("GCM tag fetch failed");
    return out;
}

Bytes aead_open(ByteSpan key, ByteSpan nonce, ByteSpan aad, ByteSpan ciphertext_and_tag)
{
    check_sizes(key, nonce);
    if (ciphertext_and_tag.size() < AEAD_TAG_SIZE)
        throw AuthenticationError("ciphertext shorter than the AEAD tag");
    size_t ct_size = ciphertext_and_tag.size() - AEAD_TAG_SIZE;

    CipherCtx ctx = make_ctx();
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        throw CryptoError("GCM decrypt init failed");

    int len = 0;
    if (!aad.empty() && EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), int(aad.size())) != 1)
        throw CryptoError("GCM AAD failed");

    Bytes out(ct_size);
    int pt_len = 0;
    if (ct_size > 0) {
        if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, ciphertext_and_tag.data(), int(ct_size)) != 1)
            throw CryptoError("GCM decrypt failed");
        pt_len = len;
    }
    // EVP_CTRL_GCM_SET_TAG wants a mutable pointer; the tag is not modified.
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, AEAD_TAG_SIZE,
                            const_cast<uint8_t*>(ciphertext_and_tag.data() + ct_size)) != 1)
        throw CryptoError("GCM tag set failed");
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + pt_len, &len) != 1)
        throw AuthenticationError("authentication failed");
    pt_len += len;
    if (size_t(pt_len) != ct_size) throw CryptoError("GCM length mismatch");
    return out;
}

Bytes derive_chunk_nonce(ByteSpan base12, uint64_t counter)
{
    if (base12.size() != AEAD_NONCE_SIZE) throw ValidationError("chunk nonce base must be 12 bytes");
    Bytes nonce(base12.begin(), base12.end());
    for (int i = 0; i < 8; ++i) nonce[4 + i] ^= uint8_t(counter >> (8 * i));
    return nonce;
}

} // namespace escrowsim
