// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/release/verifier.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

bool pays_address(const Transaction& tx, const Hash160& address)
{
    for (const Output& out : tx.outputs)
        if (const auto* pay = std::get_if<PayToAddress>(&out.script))
            if (pay->address == address) return true;
    return false;
}

std::optional<ReleaseMetadata> metadata_of(const Transaction& tx)
{
    std::optional<ByteSpan> payload = tx.op_return();
    if (!payload) return std::nullopt;
    return ReleaseMetadata::parse(*payload);
}

} // namespace

const char* refusal_reason_name(RefusalReason reason)
{
    switch (reason) {
    case RefusalReason::None: return "none";
    case RefusalReason::NoPayment: return "no-payment";
    case RefusalReason::InsufficientConfirmations: return "insufficient-confirmations";
    case RefusalReason::BadSignature: return "bad-signature";
    case RefusalReason::NonceMismatch: return "nonce-mismatch";
    case RefusalReason::InvalidHeaderChain: return "invalid-header-chain";
    case RefusalReason::BadProof: return "bad-proof";
    case RefusalReason::UntrustedEndpoint: return "untrusted-endpoint";
    case RefusalReason::EndpointUnavailable: return "endpoint-unavailable";
    }
    return "unknown";
}

ReleaseDecision ReleaseDecision::refuse(RefusalReason reason)
{
    ReleaseDecision d;
    d.released = false;
    d.reason = reason;
    return d;
}

ReleaseDecision ReleaseDecision::release(SecureBytes vk_prv)
{
    ReleaseDecision d;
    d.released = true;
    d.vk_prv = std::move(vk_prv);
    return d;
}

// The single unseal site: every released decision funnels through here, so
// no refusal path can reach the boundary's UnsealRelease op.
static ReleaseDecision unseal_and_release(ReleaseContext& ctx)
{
    return ReleaseDecision::release(ctx.boundary->unseal_for_release(ctx.sealed_vk));
}

ReleaseDecision scheme1_verify_and_release(ReleaseContext& ctx, const ReleaseMetadata& md,
                                           ByteSpan signature)
{
    if (md.ak_fp != fingerprint20(ctx.ak_pub_der))
        return ReleaseDecision::refuse(RefusalReason::BadSignature);
    if (!rsa_verify(ctx.ak_pub_der, md.serialize(), signature))
        return ReleaseDecision::refuse(RefusalReason::BadSignature);
    // Binding checks: a signed hash minted for one enclave must die outside
    // it. A foreign victim key id is the same replay, so it shares the
    // nonce-mismatch reason.
    if (md.nonce != ctx.nonce)
        return ReleaseDecision::refuse(RefusalReason::NonceMismatch);
    if (md.vk_fp != fingerprint20(ctx.vk_pub))
        return ReleaseDecision::refuse(RefusalReason::NonceMismatch);
    return unseal_and_release(ctx);
}

SpvSync spv_sync(HeaderSource& peer, const Checkpoint& checkpoint, uint32_t expected_bits)
{
    SpvSync sync;
    std::vector<BlockHeader> headers = peer.get_headers(checkpoint.hash);

    Hash256 prev = checkpoint.hash;
    uint64_t height = checkpoint.height;
    for (const BlockHeader& header : headers) {
        ++height;
        if (header.prev_hash != prev) {
            sync.fail_height = height;
            sync.fail_what = "broken linkage";
            return sync;
        }
        if (header.bits != expected_bits) {
            sync.fail_height = height;
            sync.fail_what = "unexpected difficulty";
            return sync;
        }
        if (!header.meets_target()) {
            sync.fail_height = height;
            sync.fail_what = "hash above target";
            return sync;
        }
        prev = header.hash();
    }
    sync.ok = true;
    sync.headers = std::move(headers);
    return sync;
}

ReleaseDecision spv_verify_payment(ReleaseContext& ctx, HeaderSource& peer,
                                   const Hash160& wallet, const Hash256& txid,
                                   const ReleasePolicy& policy)
{
    SpvSync sync;
    std::optional<MerkleBlockAnswer> mb;
    try {
        sync = spv_sync(peer, policy.checkpoint, policy.expected_bits);
        if (!sync.ok) return ReleaseDecision::refuse(RefusalReason::InvalidHeaderChain);
        mb = peer.get_merkle_block(txid);
    } catch (const TransportError&) {
        return ReleaseDecision::refuse(RefusalReason::EndpointUnavailable);
    }
    if (!mb) return ReleaseDecision::refuse(RefusalReason::NoPayment);

    // The proof must anchor in a block of the validated suffix.
    Hash256 block_hash = mb->header.hash();
    size_t index = sync.headers.size();
    for (size_t i = 0; i < sync.headers.size(); ++i) {
        if (sync.headers[i].hash() == block_hash) {
            index = i;
            break;
        }
    }
    if (index == sync.headers.size()) return ReleaseDecision::refuse(RefusalReason::BadProof);

    if (mb->proof.leaf_txid != txid || mb->proof.block_hash != block_hash ||
        mb->tx.txid() != txid || !verify_proof(mb->header.merkle_root, mb->proof))
        return ReleaseDecision::refuse(RefusalReason::BadProof);

    if (wallet != ctx.wallet || !pays_address(mb->tx, ctx.wallet))
        return ReleaseDecision::refuse(RefusalReason::NoPayment);
    std::optional<ReleaseMetadata> md = metadata_of(mb->tx);
    if (!md) return ReleaseDecision::refuse(RefusalReason::NoPayment);
    if (md->nonce != ctx.nonce) return ReleaseDecision::refuse(RefusalReason::NonceMismatch);

    uint64_t confirmations = sync.headers.size() - index;
    if (confirmations < policy.min_confirmations)
        return ReleaseDecision::refuse(RefusalReason::InsufficientConfirmations);
    if (confirmations - 1 < policy.n_extra_blocks)
        return ReleaseDecision::refuse(RefusalReason::InsufficientConfirmations);

    return unseal_and_release(ctx);
}

ReleaseDecision scheme3_verify_and_release(ReleaseContext& ctx, ExplorerSource& explorer,
                                           const Hash160& wallet, const Hash256& txid,
                                           const ReleasePolicy& policy,
                                           HeaderSource* cross_check)
{
    ExplorerTxInfo info;
    try {
        info = explorer.get_tx(wallet, txid);
    } catch (const UntrustedEndpointError&) {
        return ReleaseDecision::refuse(RefusalReason::UntrustedEndpoint);
    } catch (const TransportError&) {
        return ReleaseDecision::refuse(RefusalReason::EndpointUnavailable);
    }

    if (!info.found) return ReleaseDecision::refuse(RefusalReason::NoPayment);
    if (info.tx.txid() != txid) return ReleaseDecision::refuse(RefusalReason::BadProof);
    if (wallet != ctx.wallet || !pays_address(info.tx, ctx.wallet))
        return ReleaseDecision::refuse(RefusalReason::NoPayment);
    std::optional<ReleaseMetadata> md = metadata_of(info.tx);
    if (!md) return ReleaseDecision::refuse(RefusalReason::NoPayment);
    if (md->nonce != ctx.nonce) return ReleaseDecision::refuse(RefusalReason::NonceMismatch);
    if (info.confirmations < policy.min_confirmations)
        return ReleaseDecision::refuse(RefusalReason::InsufficientConfirmations);

    // Combined mode: the explorer's word alone does not unseal anything.
    if (cross_check) return spv_verify_payment(ctx, *cross_check, wallet, txid, policy);
    return unseal_and_release(ctx);
}

} // namespace escrowsim
