// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/support/errors.hpp>

#include <openssl/evp.h>
#include <openssl/rsa.h>
#include <openssl/x509.h>

#include <memory>

namespace escrowsim {

namespace {

using PkeyPtr = std::unique_ptr<EVP_PKEY, decltype(&EVP_PKEY_free)>;
using PctxPtr = std::unique_ptr<EVP_PKEY_CTX, decltype(&EVP_PKEY_CTX_free)>;
using MdctxPtr = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

PkeyPtr raw_keygen(int type)
{
    PctxPtr ctx(EVP_PKEY_CTX_new_id(type, nullptr), EVP_PKEY_CTX_free);
    if (!ctx || EVP_PKEY_keygen_init(ctx.get()) != 1) throw CryptoError("keygen init failed");
    EVP_PKEY* pkey = nullptr;
    if (EVP_PKEY_keygen(ctx.get(), &pkey) != 1) throw CryptoError("keygen failed");
    return PkeyPtr(pkey, EVP_PKEY_free);
}

SecureBytes raw_private(EVP_PKEY* pkey)
{
    size_t len = 0;
    if (EVP_PKEY_get_raw_private_key(pkey, nullptr, &len) != 1) throw CryptoError("raw private export failed");
    SecureBytes out(len);
    if (EVP_PKEY_get_raw_private_key(pkey, out.data(), &len) != 1) throw CryptoError("raw private export failed");
    return out;
}

Bytes raw_public(EVP_PKEY* pkey)
{
    size_t len = 0;
    if (EVP_PKEY_get_raw_public_key(pkey, nullptr, &len) != 1) throw CryptoError("raw public export failed");
    Bytes out(len);
    if (EVP_PKEY_get_raw_public_key(pkey, out.data(), &len) != 1) throw CryptoError("raw public export failed");
    return out;
}

PkeyPtr from_raw_private(int type, ByteSpan priv)
{
    EVP_PKEY* pkey = EVP_PKEY_new_raw_private_key(type, nullptr, priv.data(), priv.size());
    if (!pkey) throw CryptoError("raw private import failed");
    return PkeyPtr(pkey, EVP_PKEY_free);
}

PkeyPtr from_raw_public(int type, ByteSpan pub)
{
    EVP_PKEY* pkey = EVP_PKEY_new_raw_public_key(type, nullptr, pub.data(), pub.size());
    if (!pkey) throw CryptoError("raw public import failed");
    return PkeyPtr(pkey, EVP_PKEY_free);
}

} // namespace

X25519KeyPair X25519KeyPair::generate()
{
    PkeyPtr pkey = raw_keygen(EVP_PKEY_X25519);
    return X25519KeyPair{raw_private(pkey.get()), raw_public(pkey.get())};
}

X25519KeyPair X25519KeyPair::from_private(ByteSpan priv32)
{
    if (priv32.size() != CURVE25519_KEY_SIZE) throw ValidationError("X25519 private key must be 32 bytes");
    PkeyPtr pkey = from_raw_private(EVP_PKEY_X25519, priv32);
    return X25519KeyPair{raw_private(pkey.get()), raw_public(pkey.get())};
}

SecureBytes x25519_shared(ByteSpan priv32, ByteSpan pub32)
{
    if (priv32.size() != CURVE25519_KEY_SIZE || pub32.size() != CURVE25519_KEY_SIZE)
        throw ValidationError("X25519 keys must be 32 bytes");
    PkeyPtr priv = from_raw_private(EVP_PKEY_X25519, priv32);
    PkeyPtr pub = from_raw_public(EVP_PKEY_X25519, pub32);
    PctxPtr ctx(EVP_PKEY_CTX_new(priv.get(), nullptr), EVP_PKEY_CTX_free);
    if (!ctx || EVP_PKEY_derive_init(ctx.get()) != 1 || EVP_PKEY_derive_set_peer(ctx.get(), pub.get()) != 1)
        throw CryptoError("X25519 derive init failed");
    size_t len = 0;
    if (EVP_PKEY_derive(ctx.get(), nullptr, &len) != 1) throw CryptoError("X25519 derive failed");
    SecureBytes out(len);
    if (EVP_PKEY_derive(ctx.get(), out.data(), &len) != 1) throw CryptoError("X25519 derive failed");
    return out;
}

Ed25519KeyPair Ed25519KeyPair::generate()
{
    PkeyPtr pkey = raw_keygen(EVP_PKEY_ED25519);
    return Ed25519KeyPair{raw_private(pkey.get()), raw_public(pkey.get())};
}

Ed25519KeyPair Ed25519KeyPair::from_private(ByteSpan priv32)
{
    if (priv32.size() != CURVE25519_KEY_SIZE) throw ValidationError("Ed25519 private key must be 32 bytes");
    PkeyPtr pkey = from_raw_private(EVP_PKEY_ED25519, priv32);
    return Ed25519KeyPair{raw_private(pkey.get()), raw_public(pkey.get())};
}

Bytes ed25519_sign(ByteSpan priv32, ByteSpan msg)
{
    PkeyPtr pkey = from_raw_private(EVP_PKEY_ED25519, priv32);
    MdctxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1)
        throw CryptoError("Ed25519 sign init failed");
    size_t len = ED25519_SIG_SIZE;
    Bytes sig(len);
    if (EVP_DigestSign(ctx.get(), sig.data(), &len, msg.data(), msg.size()) != 1 || len != ED25519_SIG_SIZE)
        throw CryptoError("Ed25519 sign failed");
    return sig;
}

bool ed25519_verify(ByteSpan pub32, ByteSpan msg, ByteSpan sig)
{
    if (pub32.size() != CURVE25519_KEY_SIZE || sig.size() != ED25519_SIG_SIZE) return false;
    PkeyPtr pkey = from_raw_public(EVP_PKEY_ED25519, pub32);
    MdctxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, pkey.get()) != 1)
        throw CryptoError("Ed25519 verify init failed");
    return EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), msg.data(), msg.size()) == 1;
}

RsaKeyPair::RsaKeyPair(RsaKeyPair&& other) noexcept : m_pkey(other.m_pkey)
{
    other.m_pkey = nullptr;
}

RsaKeyPair& RsaKeyPair::operator=(RsaKeyPair&& other) noexcept
{
    if (this != &other) {
        if (m_pkey) EVP_PKEY_free(static_cast<EVP_PKEY*>(m_pkey));
        m_pkey = other.m_pkey;
        other.m_pkey = nullptr;
    }
    return *this;
}

RsaKeyPair::~RsaKeyPair()
{
    if (m_pkey) EVP_PKEY_free(static_cast<EVP_PKEY*>(m_pkey));
}

RsaKeyPair RsaKeyPair::generate(int bits)
{
    PctxPtr ctx(EVP_PKEY_CTX_new_id(EVP_PKEY_RSA, nullptr), EVP_PKEY_CTX_free);
    if (!ctx || EVP_PKEY_keygen_init(ctx.get()) != 1 ||
        EVP_PKEY_CTX_set_rsa_keygen_bits(ctx.get(), bits) != 1)
        throw CryptoError("RSA keygen init failed");
    EVP_PKEY* pkey = nullptr;
    if (EVP_PKEY_keygen(ctx.get(), &pkey) != 1) throw CryptoError("RSA keygen failed");
    return RsaKeyPair(pkey);
}

RsaKeyPair RsaKeyPair::from_private_der(ByteSpan pkcs8_der)
{
    const unsigned char* p = pkcs8_der.data();
    PKCS8_PRIV_KEY_INFO* p8 = d2i_PKCS8_PRIV_KEY_INFO(nullptr, &p, long(pkcs8_der.size()));
    if (!p8) throw ParseError("invalid PKCS#8 private key");
    EVP_PKEY* pkey = EVP_PKCS82PKEY(p8);
    PKCS8_PRIV_KEY_INFO_free(p8);
    if (!pkey) throw ParseError("invalid RSA private key");
    return RsaKeyPair(pkey);
}

Bytes RsaKeyPair::public_der() const
{
    unsigned char* der = nullptr;
    int len = i2d_PUBKEY(static_cast<EVP_PKEY*>(m_pkey), &der);
    if (len <= 0) throw CryptoError("public key export failed");
    Bytes out(der, der + len);
    OPENSSL_free(der);
    return out;
}

Bytes RsaKeyPair::private_der() const
{
    PKCS8_PRIV_KEY_INFO* p8 = EVP_PKEY2PKCS8(static_cast<EVP_PKEY*>(m_pkey));
    if (!p8) throw CryptoError("private key export failed");
    unsigned char* der = nullptr;
    int len = i2d_PKCS8_PRIV_KEY_INFO(p8, &der);
    PKCS8_PRIV_KEY_INFO_free(p8);
    if (len <= 0) throw CryptoError("private key export failed");
    Bytes out(der, der + len);
    OPENSSL_free(der);
    return out;
}

Bytes RsaKeyPair::sign(ByteSpan msg) const
{
    MdctxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, EVP_sha256(), nullptr,
                                   static_cast<EVP_PKEY*>(m_pkey)) != 1)
        throw CryptoError("RSA sign init failed");
    size_t len = 0;
    if (EVP_DigestSign(ctx.get(), nullptr, &len, msg.data(), msg.size()) != 1)
        throw CryptoError("RSA sign failed");
    Bytes sig(len);
    if (EVP_DigestSign(ctx.get(), sig.data(), &len, msg.data(), msg.size()) != 1)
        throw CryptoError("RSA sign failed");
    sig.resize(len);
    return sig;
}

size_t RsaKeyPair::signature_size() const
{
    return size_t(EVP_PKEY_get_size(static_cast<EVP_PKEY*>(m_pkey)));
}

bool rsa_verify(ByteSpan pub_spki_der, ByteSpan msg, ByteSpan sig)
{
    const unsigned char* p = pub_spki_der.data();
    PkeyPtr pkey(d2i_PUBKEY(nullptr, &p, long(pub_spki_der.size())), EVP_PKEY_free);
    if (!pkey) return false;
    MdctxPtr ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, EVP_sha256(), nullptr, pkey.get()) != 1)
        return false;
    return EVP_DigestVerify(ctx.get(), sig.data(), sig.size(), msg.data(), msg.size()) == 1;
}

} // namespace escrowsim
