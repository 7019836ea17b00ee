// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CLI_STATE_H
#define ESCROWSIM_CLI_STATE_H

#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/enclave/sealing.hpp>
#include <escrowsim/release/protocol.hpp>

#include <filesystem>

namespace escrowsim {

inline constexpr char STATE_MAGIC[] = "ESCROWSIM-STATE"; // stored with its NUL
inline constexpr uint32_t STATE_VERSION = 1;

// Everything one simulation run carries between CLI invocations: both the
// victim-side provisioning and the attacker-side key, since the simulator
// plays every role. Lives inside the corpus root.
struct SimState {
    uint64_t seed = 1;
    uint32_t bits = 0;
    EngineMode mode = EngineMode::Reactive;

    Bytes device_secret; // 32 bytes
    Bytes vk_pub;        // 32 bytes
    SealedBlob sealed_vk;
    SealedBlob sealed_wallet;
    Hash256 nonce{};

    Bytes ak_pub_der;
    Bytes ak_prv_der;
    Hash160 wallet{};

    Hash256 payment_txid{}; // all-zero until pay runs
    uint64_t amount = 0;
    Bytes signature; // scheme-1 signature once minted
    Bytes vk_prv;    // empty until released or recovered

    ReleaseMetadata metadata() const;
    bool has_payment() const { return payment_txid != Hash256{}; }

    Bytes serialize() const;
    static SimState deserialize(ByteSpan data);

    void save(const std::filesystem::path& path) const;
    static SimState load(const std::filesystem::path& path);
};

} // namespace escrowsim

#endif // ESCROWSIM_CLI_STATE_H
