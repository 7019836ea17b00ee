// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_AEAD_H
#define ESCROWSIM_CRYPTO_AEAD_H

#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

// AES-256-GCM. Output of seal is ciphertext || 16-byte tag; open throws
// AuthenticationError on any key, nonce, AAD, or data mismatch.
inline constexpr size_t AEAD_KEY_SIZE = 32;
inline constexpr size_t AEAD_NONCE_SIZE = 12;
inline constexpr size_t AEAD_TAG_SIZE = 16;

Bytes aead_seal(ByteSpan key, ByteSpan nonce, ByteSpan aad, ByteSpan plaintext);
Bytes aead_open(ByteSpan key, ByteSpan nonce, ByteSpan aad, ByteSpan ciphertext_and_tag);

// Chunk nonce: the 12-byte base with the chunk counter XORed into the last
// eight bytes, little-endian.
Bytes derive_chunk_nonce(ByteSpan base12, uint64_t counter);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_AEAD_H
