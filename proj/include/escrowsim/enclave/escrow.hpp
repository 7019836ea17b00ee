// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_ENCLAVE_ESCROW_H
#define ESCROWSIM_ENCLAVE_ESCROW_H

#include <escrowsim/enclave/device_secret.hpp>
#include <escrowsim/enclave/sealing.hpp>

#include <filesystem>

namespace escrowsim {

inline constexpr char ESCROW_MAGIC[] = "ESCROWSIM-ESCRW"; // stored with its NUL
inline constexpr uint32_t ESCROW_VERSION = 1;

// Operator-owned recovery record written at keypair generation: the device
// secret plus the sealed victim key, so simulated victim data can always be
// recovered without the release path.
struct EscrowFile {
    Bytes device_secret; // 32 bytes
    Bytes vk_pub;        // 32 bytes
    SealedBlob sealed_vk;
    SealedBlob sealed_wallet;

    Bytes serialize() const;
    static EscrowFile deserialize(ByteSpan data);

    void save(const std::filesystem::path& path) const;
    static EscrowFile load(const std::filesystem::path& path);

    // Unseals VK_prv with the escrowed device secret, bypassing release.
    SecureBytes recover_vk_priv() const;
};

} // namespace escrowsim

#endif // ESCROWSIM_ENCLAVE_ESCROW_H
