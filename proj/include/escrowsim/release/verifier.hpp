// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_RELEASE_VERIFIER_H
#define ESCROWSIM_RELEASE_VERIFIER_H

#include <escrowsim/chainkit/header.hpp>
#include <escrowsim/chainkit/merkle.hpp>
#include <escrowsim/chainkit/transaction.hpp>
#include <escrowsim/enclave/boundary.hpp>
#include <escrowsim/release/protocol.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace escrowsim {

// The stable block embedded at provisioning time; synced headers must build
// on it.
struct Checkpoint {
    Hash256 hash{};
    uint64_t height = 0;
};

struct ReleasePolicy {
    uint32_t min_confirmations = 6;
    uint32_t n_extra_blocks = 0; // extra validated blocks required above the payment
    Checkpoint checkpoint;
    uint32_t expected_bits = 0; // the network's fixed toy difficulty
};

enum class RefusalReason : uint8_t {
    None = 0,
    NoPayment,
    InsufficientConfirmations,
    BadSignature,
    NonceMismatch,
    InvalidHeaderChain,
    BadProof,
    UntrustedEndpoint,
    EndpointUnavailable,
};

const char* refusal_reason_name(RefusalReason reason);

// Every verification outcome is a decision; refusal is never an exception,
// and VK_prv is present only on the released branch.
struct ReleaseDecision {
    bool released = false;
    RefusalReason reason = RefusalReason::None;
    std::optional<SecureBytes> vk_prv;

    static ReleaseDecision refuse(RefusalReason reason);
    static ReleaseDecision release(SecureBytes vk_prv);
};

// What the enclave-side verifier was provisioned with.
struct ReleaseContext {
    EnclaveBoundary* boundary = nullptr;
    SealedBlob sealed_vk;
    Bytes vk_pub;     // 32 bytes
    Bytes ak_pub_der; // embedded attacker public key
    Hash256 nonce{};  // this enclave's release nonce
    Hash160 wallet{}; // attacker address payments must target
};

// What the SPV client needs from a peer. Implementations may throw
// TransportError; the verifiers turn that into endpoint-unavailable.
struct MerkleBlockAnswer {
    BlockHeader header;
    MerkleProof proof;
    Transaction tx;
};

class HeaderSource {
public:
    virtual ~HeaderSource() = default;
    // Headers strictly above from_hash up to the tip, oldest first; empty
    // when from_hash is unknown to the peer.
    virtual std::vector<BlockHeader> get_headers(const Hash256& from_hash) = 0;
    virtual std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256& txid) = 0;
};

// What the explorer client needs from an endpoint. Implementations may throw
// TransportError or UntrustedEndpointError.
struct ExplorerTxInfo {
    bool found = false;
    Transaction tx;
    uint32_t confirmations = 0;
};

class ExplorerSource {
public:
    virtual ~ExplorerSource() = default;
    virtual ExplorerTxInfo get_tx(const Hash160& wallet, const Hash256& txid) = 0;
};

// Scheme 1: attacker-signed metadata. Released iff the signature verifies
// under the embedded attacker key and the metadata names this enclave's
// nonce and victim key.
ReleaseDecision scheme1_verify_and_release(ReleaseContext& ctx, const ReleaseMetadata& md,
                                           ByteSpan signature);

// Scheme 2 sync: fetch and validate the header suffix above the checkpoint.
// Every header must link to its parent, declare the expected difficulty,
// and meet it.
struct SpvSync {
    bool ok = false;
    std::vector<BlockHeader> headers; // validated, oldest first
    uint64_t fail_height = 0;
    std::string fail_what;
};

SpvSync spv_sync(HeaderSource& peer, const Checkpoint& checkpoint, uint32_t expected_bits);

// Scheme 2: released iff a validated header suffix proves txid at depth
// >= min_confirmations with >= n_extra_blocks above it, and the transaction
// pays the attacker wallet and carries this enclave's nonce.
ReleaseDecision spv_verify_payment(ReleaseContext& ctx, HeaderSource& peer,
                                   const Hash160& wallet, const Hash256& txid,
                                   const ReleasePolicy& policy);

// Scheme 3: ask a pinned explorer endpoint. With cross_check set (combined
// mode), an approving explorer answer is additionally verified through the
// SPV path before anything is released.
ReleaseDecision scheme3_verify_and_release(ReleaseContext& ctx, ExplorerSource& explorer,
                                           const Hash160& wallet, const Hash256& txid,
                                           const ReleasePolicy& policy,
                                           HeaderSource* cross_check = nullptr);

} // namespace escrowsim

#endif // ESCROWSIM_RELEASE_VERIFIER_H
