// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTOFILE_ENVELOPE_H
#define ESCROWSIM_CRYPTOFILE_ENVELOPE_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/enclave/boundary.hpp>
#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

inline constexpr char ENVELOPE_MAGIC[] = "ESCROWSIM-ENV"; // stored with its NUL
inline constexpr uint8_t ENVELOPE_VERSION = 1;
inline constexpr size_t ENVELOPE_CHUNK_SIZE = 64 * 1024;
inline constexpr char ENVELOPE_SUFFIX[] = ".esc";

enum class EngineMode : uint8_t {
    Reactive = 1,  // key generated inside, file encrypted outside
    Proactive = 2, // data streams through the boundary, key never leaves
};

const char* engine_mode_name(EngineMode mode);
EngineMode engine_mode_from_name(std::string_view name);

// Encrypts contents into an envelope. Both modes produce the same format:
// magic | version | u16 wrapped-key length | wrapped key | 12-byte data
// nonce | chunk records. Each chunk record is flag (1 = more follow,
// 0 = final) | u32 length | ciphertext+tag, authenticated with the flag and
// chunk index as associated data so reordering or truncation fails.
Bytes envelope_encrypt(ByteSpan contents, ByteSpan vk_pub, EngineMode mode,
                       EnclaveBoundary& boundary);

// Recovers the original bytes; ParseError on structural damage,
// AuthenticationError on any cryptographic mismatch.
Bytes envelope_decrypt(ByteSpan envelope, ByteSpan vk_prv);

// Just the per-file key, for the capture experiment.
SecureBytes unwrap_envelope_key(ByteSpan envelope, ByteSpan vk_prv);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTOFILE_ENVELOPE_H
