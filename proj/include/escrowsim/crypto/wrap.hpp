// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_WRAP_H
#define ESCROWSIM_CRYPTO_WRAP_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

// Hybrid wrap of a small secret to an X25519 public key: ephemeral ECDH,
// HKDF-SHA256 into an AEAD key, then AES-256-GCM. Output layout is
// ephemeral_pub(32) || nonce(12) || ciphertext+tag.
Bytes wrap_secret(ByteSpan recipient_pub, ByteSpan secret);

// Throws AuthenticationError on tamper or wrong recipient key.
SecureBytes unwrap_secret(ByteSpan recipient_priv, ByteSpan wrapped);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_WRAP_H
