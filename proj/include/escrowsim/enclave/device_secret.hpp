// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_ENCLAVE_DEVICE_SECRET_H
#define ESCROWSIM_ENCLAVE_DEVICE_SECRET_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/support/bytes.hpp>

#include <filesystem>

namespace escrowsim {

inline constexpr size_t DEVICE_SECRET_SIZE = 32;

// Stand-in for the processor-fused base seal key: 32 raw bytes owned by the
// operator. Never appended to the exposure ledger; never serialized except
// into the operator escrow file.
class DeviceSecret {
public:
    static DeviceSecret from_bytes(ByteSpan secret32);
    static DeviceSecret load(const std::filesystem::path& path); // exactly 32 raw bytes
    static DeviceSecret generate();

    void save(const std::filesystem::path& path) const;

    ByteSpan bytes() const { return m_secret.span(); }
    DeviceSecret clone() const { return DeviceSecret(m_secret.clone()); }

private:
    explicit DeviceSecret(SecureBytes secret) : m_secret(std::move(secret)) {}

    SecureBytes m_secret;
};

} // namespace escrowsim

#endif // ESCROWSIM_ENCLAVE_DEVICE_SECRET_H
