// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/kdf.hpp>
#include <escrowsim/support/errors.hpp>

#include <openssl/evp.h>
#include <openssl/kdf.h>

#include <memory>

namespace escrowsim {

Bytes hkdf_sha256(ByteSpan ikm, ByteSpan salt, ByteSpan info, size_t length)
{
    std::unique_ptr<EVP_PKEY_CTX, decltype(&EVP_PKEY_CTX_free)> ctx(
        EVP_PKEY_CTX_new_id(EVP_PKEY_HKDF, nullptr), EVP_PKEY_CTX_free);
    if (!ctx) throw CryptoError("HKDF context allocation failed");
    if (EVP_PKEY_derive_init(ctx.get()) != 1 ||
        EVP_PKEY_CTX_set_hkdf_md(ctx.get(), EVP_sha256()) != 1 ||
        EVP_PKEY_CTX_set1_hkdf_salt(ctx.get(), salt.data(), int(salt.size())) != 1 ||
        EVP_PKEY_CTX_set1_hkdf_key(ctx.get(), ikm.data(), int(ikm.size())) != 1 ||
        EVP_PKEY_CTX_add1_hkdf_info(ctx.get(), info.data(), int(info.size())) != 1) {
        throw CryptoError("HKDF setup failed");
    }
    Bytes out(length);
    size_t outlen = length;
    if (EVP_PKEY_derive(ctx.get(), out.data(), &outlen) != 1 || outlen != length)
        throw CryptoError("HKDF derive failed");
    return out;
}

} // namespace escrowsim
