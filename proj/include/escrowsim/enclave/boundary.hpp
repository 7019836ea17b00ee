// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_ENCLAVE_BOUNDARY_H
#define ESCROWSIM_ENCLAVE_BOUNDARY_H

#include <escrowsim/crypto/secure_bytes.hpp>
#include <escrowsim/enclave/device_secret.hpp>
#include <escrowsim/enclave/exposure_ledger.hpp>
#include <escrowsim/enclave/sealing.hpp>

#include <cstdint>
#include <map>

namespace escrowsim {

enum class EnclaveOp : uint8_t {
    Ping = 1,          // echoes the payload
    GenKeys = 2,       // wallet(20) -> vk_pub(32) | sealed VK_prv | sealed wallet
    GenNonce = 3,      // () -> nonce(32), retained in enclave state
    EkNew = 4,         // vk_pub(32) -> ek(32) | wrapped ek; EK leaves the boundary
    FileBegin = 5,     // vk_pub(32) | nonce_base(12) -> session handle u32; EK stays inside
    FileChunk = 6,     // handle u32 | aad_len u32 | aad | plaintext -> ciphertext+tag
    FileEnd = 7,       // handle u32 -> wrapped ek; session EK wiped
    UnsealRelease = 8, // serialized SealedBlob -> plaintext; the release gate
};

struct BoundaryStats {
    uint64_t enter_count = 0;
    uint64_t exit_count = 0;
    uint32_t transition_cost_us = 0;
};

struct GenKeysResult {
    Bytes vk_pub;
    SealedBlob sealed_vk;
    SealedBlob sealed_wallet;
};

struct ReactiveKey {
    SecureBytes ek;
    Bytes wrapped_ek;
};

inline constexpr char VK_SEAL_LABEL[] = "victim-key-v1";
inline constexpr char WALLET_SEAL_LABEL[] = "wallet-v1";

// Software stand-in for the hardware enclave. Everything inside dispatch()
// is "in-enclave"; call() is the only way through, and it does the crossing
// accounting, the simulated transition cost, and the exposure-ledger writes
// for every secret that leaves. Single-threaded by contract.
class EnclaveBoundary {
public:
    EnclaveBoundary(DeviceSecret device, ExposureLedger* ledger, uint32_t transition_cost_us = 0);

    Bytes call(EnclaveOp op, ByteSpan payload);

    const BoundaryStats& stats() const { return m_stats; }

    // Typed wrappers; each is exactly one call().
    Bytes ping(ByteSpan payload);
    GenKeysResult gen_victim_keypair(const Hash160& wallet_address);
    Hash256 gen_nonce();
    ReactiveKey reactive_new_key(ByteSpan vk_pub);
    uint32_t file_begin(ByteSpan vk_pub, ByteSpan nonce_base12);
    Bytes file_chunk(uint32_t handle, ByteSpan aad, ByteSpan plaintext);
    Bytes file_end(uint32_t handle);
    SecureBytes unseal_for_release(const SealedBlob& blob);

private:
    Bytes dispatch(EnclaveOp op, ByteSpan payload);

    DeviceSecret m_device;
    ExposureLedger* m_ledger;
    BoundaryStats m_stats;

    struct Session {
        SecureBytes ek;
        Bytes wrapped_ek;
        Bytes nonce_base;
        uint64_t counter = 0;
    };
    std::map<uint32_t, Session> m_sessions;
    uint32_t m_next_handle = 1;
    Hash256 m_nonce{};
};

} // namespace escrowsim

#endif // ESCROWSIM_ENCLAVE_BOUNDARY_H
