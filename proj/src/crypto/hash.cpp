// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>

#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace escrowsim {

namespace {

// One context per thread; mining hashes millions of headers and the
// per-call EVP_MD_CTX allocation is measurable.
EVP_MD_CTX* digest_ctx()
{
    thread_local EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw CryptoError("EVP_MD_CTX_new failed");
    return ctx;
}

const EVP_MD* sha256_md()
{
    static const EVP_MD* md = EVP_sha256();
    return md;
}

void sha256_into(ByteSpan a, ByteSpan b, uint8_t* out32)
{
    EVP_MD_CTX* ctx = digest_ctx();
    if (EVP_DigestInit_ex(ctx, sha256_md(), nullptr) != 1 ||
        (!a.empty() && EVP_DigestUpdate(ctx, a.data(), a.size()) != 1) ||
        (!b.empty() && EVP_DigestUpdate(ctx, b.data(), b.size()) != 1) ||
        EVP_DigestFinal_ex(ctx, out32, nullptr) != 1) {
        throw CryptoError("SHA-256 failed");
    }
}

} // namespace

Hash256 sha256(ByteSpan data)
{
    Hash256 out;
    sha256_into(data, {}, out.data());
    return out;
}

Hash256 sha256_concat(ByteSpan a, ByteSpan b)
{
    Hash256 out;
    sha256_into(a, b, out.data());
    return out;
}

Hash256 double_sha256(ByteSpan data)
{
    Hash256 first;
    sha256_into(data, {}, first.data());
    Hash256 out;
    sha256_into(ByteSpan(first.data(), first.size()), {}, out.data());
    return out;
}

Hash256 double_sha256_concat(ByteSpan a, ByteSpan b)
{
    Hash256 first;
    sha256_into(a, b, first.data());
    Hash256 out;
    sha256_into(ByteSpan(first.data(), first.size()), {}, out.data());
    return out;
}

Hash256 hmac_sha256(ByteSpan key, ByteSpan msg)
{
    Hash256 out;
    unsigned int len = 0;
    if (!HMAC(sha256_md(), key.data(), int(key.size()), msg.data(), msg.size(), out.data(), &len) || len != 32)
        throw CryptoError("HMAC-SHA-256 failed");
    return out;
}

Hash160 fingerprint20(ByteSpan key_bytes)
{
    Hash256 full = sha256(key_bytes);
    Hash160 out;
    std::copy(full.begin(), full.begin() + 20, out.begin());
    return out;
}

} // namespace escrowsim
