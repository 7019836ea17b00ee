// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_ENCLAVE_SEALING_H
#define ESCROWSIM_ENCLAVE_SEALING_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/enclave/device_secret.hpp>
#include <escrowsim/support/bytes.hpp>

#include <string>

namespace escrowsim {

// Device-bound authenticated encryption. The blob is useless without the
// device secret; any byte tamper, wrong device, or wrong label fails
// authentication.
struct SealedBlob {
    std::string label;
    Bytes nonce; // 12 bytes
    Bytes body;  // ciphertext || tag

    Bytes serialize() const;
    static SealedBlob deserialize(ByteReader& r);
    static SealedBlob deserialize(ByteSpan data);

    bool operator==(const SealedBlob&) const = default;
};

// HKDF-SHA256 with a fixed domain salt and the label as context info.
// Pure function: same (device, label) always gives the same key.
Bytes derive_seal_key(const DeviceSecret& device, std::string_view label);

SealedBlob seal(const DeviceSecret& device, std::string_view label, ByteSpan plaintext);
SecureBytes unseal(const DeviceSecret& device, const SealedBlob& blob);

} // namespace escrowsim

#endif // ESCROWSIM_ENCLAVE_SEALING_H
