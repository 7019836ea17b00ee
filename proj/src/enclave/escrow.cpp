// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/enclave/escrow.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

namespace escrowsim {

Bytes EscrowFile::serialize() const
{
    if (device_secret.size() != DEVICE_SECRET_SIZE || vk_pub.size() != 32)
        throw ValidationError("escrow record fields have wrong sizes");
    ByteWriter w;
    w.raw(ByteSpan(reinterpret_cast<const uint8_t*>(ESCROW_MAGIC), sizeof(ESCROW_MAGIC)));
    w.u32(ESCROW_VERSION);
    w.raw(device_secret);
    w.raw(vk_pub);
    w.raw(sealed_vk.serialize());
    w.raw(sealed_wallet.serialize());
    return w.take();
}

EscrowFile EscrowFile::deserialize(ByteSpan data)
{
    ByteReader r(data);
    r.expect_magic(ByteSpan(reinterpret_cast<const uint8_t*>(ESCROW_MAGIC), sizeof(ESCROW_MAGIC)),
                   "escrow magic");
    uint32_t version = r.u32("escrow version");
    if (version != ESCROW_VERSION)
        throw ParseError("unsupported escrow version " + std::to_string(version));
    EscrowFile escrow;
    ByteSpan secret = r.raw(DEVICE_SECRET_SIZE, "escrow device secret");
    escrow.device_secret.assign(secret.begin(), secret.end());
    ByteSpan pub = r.raw(32, "escrow victim public key");
    escrow.vk_pub.assign(pub.begin(), pub.end());
    escrow.sealed_vk = SealedBlob::deserialize(r);
    escrow.sealed_wallet = SealedBlob::deserialize(r);
    r.expect_done("escrow file");
    return escrow;
}

void EscrowFile::save(const std::filesystem::path& path) const
{
    write_file_atomic(path, serialize());
}

EscrowFile EscrowFile::load(const std::filesystem::path& path)
{
    return deserialize(read_file(path));
}

SecureBytes EscrowFile::recover_vk_priv() const
{
    DeviceSecret device = DeviceSecret::from_bytes(device_secret);
    return unseal(device, sealed_vk);
}

} // namespace escrowsim
