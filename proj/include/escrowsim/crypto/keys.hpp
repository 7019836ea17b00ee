// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_KEYS_H
#define ESCROWSIM_CRYPTO_KEYS_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

inline constexpr size_t CURVE25519_KEY_SIZE = 32;
inline constexpr size_t ED25519_SIG_SIZE = 64;

// 256-bit elliptic-curve agreement keypair (X25519); the victim key and
// the ephemeral wrap keys.
struct X25519KeyPair {
    SecureBytes priv; // raw 32-byte scalar
    Bytes pub;        // raw 32-byte point

    static X25519KeyPair generate();
    static X25519KeyPair from_private(ByteSpan priv32);
};

// Raw 32-byte shared secret from our private scalar and their public point.
SecureBytes x25519_shared(ByteSpan priv32, ByteSpan pub32);

// 256-bit elliptic-curve signing keypair (Ed25519); endpoint identities and
// trust anchors.
struct Ed25519KeyPair {
    SecureBytes priv; // raw 32-byte seed
    Bytes pub;        // raw 32-byte point

    static Ed25519KeyPair generate();
    static Ed25519KeyPair from_private(ByteSpan priv32);
};

Bytes ed25519_sign(ByteSpan priv32, ByteSpan msg);
bool ed25519_verify(ByteSpan pub32, ByteSpan msg, ByteSpan sig);

// RSA-2048 signing keypair (the attacker key). Signatures are PKCS#1 v1.5
// over SHA-256.
class RsaKeyPair {
public:
    RsaKeyPair() = default;
    RsaKeyPair(RsaKeyPair&&) noexcept;
    RsaKeyPair& operator=(RsaKeyPair&&) noexcept;
    RsaKeyPair(const RsaKeyPair&) = delete;
    RsaKeyPair& operator=(const RsaKeyPair&) = delete;
    ~RsaKeyPair();

    static RsaKeyPair generate(int bits = 2048);
    static RsaKeyPair from_private_der(ByteSpan pkcs8_der);

    Bytes public_der() const;  // SubjectPublicKeyInfo
    Bytes private_der() const; // PKCS#8
    Bytes sign(ByteSpan msg) const;
    size_t signature_size() const; // modulus size in bytes

    bool valid() const { return m_pkey != nullptr; }

private:
    explicit RsaKeyPair(void* pkey) : m_pkey(pkey) {}
    void* m_pkey = nullptr; // EVP_PKEY*
};

bool rsa_verify(ByteSpan pub_spki_der, ByteSpan msg, ByteSpan sig);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_KEYS_H
