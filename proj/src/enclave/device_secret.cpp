// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/enclave/device_secret.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

namespace escrowsim {

DeviceSecret DeviceSecret::from_bytes(ByteSpan secret32)
{
    if (secret32.size() != DEVICE_SECRET_SIZE)
        throw ValidationError("device secret must be exactly 32 bytes, got " +
                              std::to_string(secret32.size()));
    return DeviceSecret(SecureBytes(Bytes(secret32.begin(), secret32.end())));
}

DeviceSecret DeviceSecret::load(const std::filesystem::path& path)
{
    Bytes data = read_file(path);
    if (data.size() != DEVICE_SECRET_SIZE)
        throw ValidationError("device secret file must hold exactly 32 raw bytes: " + path.string());
    return DeviceSecret(SecureBytes(std::move(data)));
}

DeviceSecret DeviceSecret::generate()
{
    return DeviceSecret(SecureBytes(random_bytes(DEVICE_SECRET_SIZE)));
}

void DeviceSecret::save(const std::filesystem::path& path) const
{
    write_file_atomic(path, m_secret.span());
}

} // namespace escrowsim
