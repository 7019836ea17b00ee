// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/mine.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/enclave/escrow.hpp>
#include <escrowsim/release/chain_source.hpp>
#include <escrowsim/release/note.hpp>
#include <escrowsim/release/protocol.hpp>
#include <escrowsim/release/verifier.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/u256.hpp>

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace escrowsim;

namespace {

const uint32_t TEST_BITS = compact_from_pow2(244);

bool same_bytes(ByteSpan a, ByteSpan b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// A provisioned victim enclave plus the attacker key it answers to.
struct ReleaseRig {
    ExposureLedger ledger;
    EnclaveBoundary boundary;
    RsaKeyPair ak;
    Bytes ak_pub_der;
    Hash160 wallet{};
    GenKeysResult keys;
    Hash256 nonce{};
    ReleaseMetadata md;
    ReleaseContext ctx;
    SecureBytes vk_prv_truth;

    explicit ReleaseRig(uint8_t device_fill = 0x31)
        : boundary(DeviceSecret::from_bytes(Bytes(DEVICE_SECRET_SIZE, device_fill)), &ledger)
    {
        ak = RsaKeyPair::generate();
        ak_pub_der = ak.public_der();
        wallet = wallet_from_key(ak_pub_der);
        keys = boundary.gen_victim_keypair(wallet);
        nonce = boundary.gen_nonce();

        md.ak_fp = fingerprint20(ak_pub_der);
        md.vk_fp = fingerprint20(keys.vk_pub);
        md.nonce = nonce;

        ctx.boundary = &boundary;
        ctx.sealed_vk = keys.sealed_vk;
        ctx.vk_pub = keys.vk_pub;
        ctx.ak_pub_der = ak_pub_der;
        ctx.nonce = nonce;
        ctx.wallet = wallet;

        EscrowFile escrow;
        escrow.device_secret = Bytes(DEVICE_SECRET_SIZE, device_fill);
        escrow.vk_pub = keys.vk_pub;
        escrow.sealed_vk = keys.sealed_vk;
        escrow.sealed_wallet = keys.sealed_wallet;
        vk_prv_truth = escrow.recover_vk_priv();
    }

    bool vk_leaked() const { return ledger.contains(vk_prv_truth.span()); }
};

// Genesis checkpoint, payment at height 1, then filler blocks.
struct PaidChain {
    Chain chain;
    Checkpoint checkpoint;
    Transaction payment;
    Hash256 txid{};
};

PaidChain build_paid_chain(const ReleaseRig& rig, size_t blocks_above_payment,
                           const ReleaseMetadata& md)
{
    SimClock clock;
    Chain chain = Chain::genesis(TEST_BITS, clock.tick());
    Checkpoint cp{chain.tip().header.hash(), chain.height()};

    Transaction pay = build_payment_tx(rig.wallet, 50000, md.serialize());
    chain = chain.with_block(mine_block(cp.hash, {pay}, clock.tick(), TEST_BITS).block);
    for (size_t i = 0; i < blocks_above_payment; ++i)
        chain = chain.with_block(mine_block(chain.tip().header.hash(),
                                            {make_marker_tx(chain.height() + 1)}, clock.tick(),
                                            TEST_BITS)
                                     .block);
    return PaidChain{chain, cp, pay, pay.txid()};
}

ReleasePolicy policy_for(const PaidChain& pc, uint32_t min_conf, uint32_t n_extra = 0)
{
    ReleasePolicy policy;
    policy.min_confirmations = min_conf;
    policy.n_extra_blocks = n_extra;
    policy.checkpoint = pc.checkpoint;
    policy.expected_bits = TEST_BITS;
    return policy;
}

} // namespace

TEST_CASE("release metadata canonical form")
{
    ReleaseMetadata md;
    md.ak_fp.fill(0xAA);
    md.vk_fp.fill(0xBB);
    md.nonce.fill(0xCC);

    Bytes wire = md.serialize();
    CHECK(wire.size() == METADATA_SIZE);
    CHECK(wire.size() <= OP_RETURN_MAX);
    CHECK(to_hex(wire) ==
          "01"
          "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa"
          "bbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbb"
          "cccccccccccccccccccccccccccccccccccccccccccccccccccccccccccccccc");

    auto back = ReleaseMetadata::parse(wire);
    REQUIRE(back);
    CHECK(*back == md);

    Bytes short_wire(wire.begin(), wire.end() - 1);
    CHECK(!ReleaseMetadata::parse(short_wire));
    Bytes long_wire = wire;
    long_wire.push_back(0);
    CHECK(!ReleaseMetadata::parse(long_wire));
    Bytes bad_tag = wire;
    bad_tag[0] = 0x02;
    CHECK(!ReleaseMetadata::parse(bad_tag));
}

TEST_CASE("wallet derivation is the double-sha prefix")
{
    Bytes key(32);
    for (size_t i = 0; i < key.size(); ++i) key[i] = uint8_t(i);
    CHECK(to_hex(wallet_from_key(key)) == "2f287b4d3d4910f6cada9e1bd1b4648099e8c52c");
    CHECK(to_hex(fingerprint20(key)) == "630dcd2966c4336691125448bbb25b4ff412a49c");
    CHECK(wallet_from_key(key) != fingerprint20(key));
}

TEST_CASE("attacker scan pairs metadata with payment")
{
    RsaKeyPair ak = RsaKeyPair::generate();
    Bytes ak_der = ak.public_der();
    Hash160 wallet = wallet_from_key(ak_der);

    ReleaseMetadata md;
    md.ak_fp = fingerprint20(ak_der);
    md.vk_fp.fill(0x11);
    HmacDrbg(7, "nonce").fill(md.nonce);

    SimClock clock;
    Chain chain = Chain::genesis(TEST_BITS, clock.tick());
    CHECK(attacker_scan(chain, ak_der).empty());

    // Metadata without a payment output: excluded.
    Transaction md_only;
    md_only.outputs.push_back(Output{0, OpReturn{md.serialize()}});
    // Payment to the right wallet without metadata: excluded.
    Transaction pay_only;
    pay_only.outputs.push_back(Output{9000, PayToAddress{wallet}});
    // Metadata naming a different attacker: excluded.
    ReleaseMetadata foreign = md;
    foreign.ak_fp.fill(0x77);
    Transaction wrong_ak = build_payment_tx(wallet, 800, foreign.serialize());
    // The real thing.
    Transaction good = build_payment_tx(wallet, 50000, md.serialize());

    chain = chain.with_block(mine_block(chain.tip().header.hash(),
                                        {md_only, pay_only, wrong_ak, good}, clock.tick(),
                                        TEST_BITS)
                                 .block);

    std::vector<PaymentHit> hits = attacker_scan(chain, ak_der);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].txid == good.txid());
    CHECK(hits[0].amount == 50000);
    CHECK(hits[0].metadata == md);
}

TEST_CASE("attacker signature binds the exact metadata")
{
    RsaKeyPair ak = RsaKeyPair::generate();
    RsaKeyPair other = RsaKeyPair::generate();

    ReleaseMetadata md;
    md.ak_fp = fingerprint20(ak.public_der());
    md.vk_fp.fill(0x22);
    HmacDrbg(8, "nonce").fill(md.nonce);

    Bytes sig = attacker_sign(md, ak);
    CHECK(sig.size() == 256);
    CHECK(rsa_verify(ak.public_der(), md.serialize(), sig));
    CHECK(!rsa_verify(other.public_der(), md.serialize(), sig));

    ReleaseMetadata swapped = md;
    swapped.nonce[0] ^= 1;
    CHECK(!rsa_verify(ak.public_der(), swapped.serialize(), sig));

    // Signature malleability sweep: single-byte mutations never verify.
    HmacDrbg drbg(9, "mutate");
    int rejected = 0;
    for (int i = 0; i < 1000; ++i) {
        Bytes bad = sig;
        size_t pos = size_t(drbg.uniform(bad.size()));
        uint8_t delta = uint8_t(1 + drbg.uniform(255));
        bad[pos] ^= delta;
        if (!rsa_verify(ak.public_der(), md.serialize(), bad)) ++rejected;
    }
    CHECK(rejected == 1000);
}

TEST_CASE("signature publication chunks across OP_RETURN transactions")
{
    Hash160 vk_fp;
    vk_fp.fill(0x33);
    Bytes sig = HmacDrbg(10, "sig").bytes(256);

    std::vector<Transaction> txs = publish_signature(sig, vk_fp);
    CHECK(txs.size() == 5); // ceil(256 / 57)
    for (const Transaction& tx : txs) {
        REQUIRE(tx.op_return());
        CHECK(tx.op_return()->size() <= OP_RETURN_MAX);
        CHECK(tx.well_formed());
    }

    // One-part signature.
    CHECK(publish_signature(HmacDrbg(11, "sig").bytes(SIGNATURE_CHUNK_CAPACITY), vk_fp).size() == 1);
    CHECK_THROWS_AS(publish_signature(Bytes{}, vk_fp), ValidationError);

    SimClock clock;
    Chain chain = Chain::genesis(TEST_BITS, clock.tick());
    CHECK(!find_signature(chain, vk_fp));

    // A second victim's parts interleave without cross-talk.
    Hash160 other_fp;
    other_fp.fill(0x44);
    Bytes other_sig = HmacDrbg(12, "sig").bytes(256);
    std::vector<Transaction> other_txs = publish_signature(other_sig, other_fp);

    // All but the last part on chain: still incomplete.
    std::vector<Transaction> partial(txs.begin(), txs.end() - 1);
    partial.insert(partial.end(), other_txs.begin(), other_txs.end());
    chain = chain.with_block(
        mine_block(chain.tip().header.hash(), partial, clock.tick(), TEST_BITS).block);
    CHECK(!find_signature(chain, vk_fp));
    CHECK(find_signature(chain, other_fp) == other_sig);

    chain = chain.with_block(
        mine_block(chain.tip().header.hash(), {txs.back()}, clock.tick(), TEST_BITS).block);
    CHECK(find_signature(chain, vk_fp) == sig);
}

TEST_CASE("scheme 1 releases on the honest flow and refuses everything else")
{
    ReleaseRig rig;
    Bytes sig = attacker_sign(rig.md, rig.ak);

    SUBCASE("honest flow")
    {
        CHECK(!rig.vk_leaked());
        ReleaseDecision d = scheme1_verify_and_release(rig.ctx, rig.md, sig);
        CHECK(d.released);
        CHECK(d.reason == RefusalReason::None);
        REQUIRE(d.vk_prv);
        CHECK(same_bytes(d.vk_prv->span(), rig.vk_prv_truth.span()));
        CHECK(rig.vk_leaked()); // release is the exposure event
    }

    SUBCASE("corrupted signature")
    {
        Bytes bad = sig;
        bad[100] ^= 0x40;
        ReleaseDecision d = scheme1_verify_and_release(rig.ctx, rig.md, bad);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::BadSignature);
        CHECK(!d.vk_prv);
        CHECK(!rig.vk_leaked());
    }

    SUBCASE("replayed signature from another victim")
    {
        // Same attacker, different victim enclave.
        ReleaseRig victim_b(0x32);
        victim_b.ctx.ak_pub_der = rig.ak_pub_der;

        ReleaseDecision d = scheme1_verify_and_release(victim_b.ctx, rig.md, sig);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::NonceMismatch);
        CHECK(!victim_b.vk_leaked());
    }

    SUBCASE("right nonce, wrong victim key id")
    {
        ReleaseMetadata twisted = rig.md;
        twisted.vk_fp.fill(0x55);
        Bytes twisted_sig = attacker_sign(twisted, rig.ak);
        ReleaseDecision d = scheme1_verify_and_release(rig.ctx, twisted, twisted_sig);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::NonceMismatch);
        CHECK(!rig.vk_leaked());
    }

    SUBCASE("metadata addressed to a different attacker key")
    {
        ReleaseMetadata twisted = rig.md;
        twisted.ak_fp.fill(0x66);
        Bytes twisted_sig = attacker_sign(twisted, rig.ak);
        ReleaseDecision d = scheme1_verify_and_release(rig.ctx, twisted, twisted_sig);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::BadSignature);
    }
}

TEST_CASE("spv sync validates linkage, difficulty, and work")
{
    ReleaseRig rig;
    PaidChain pc = build_paid_chain(rig, 5, rig.md);
    ChainHeaderSource honest(pc.chain);

    SpvSync sync = spv_sync(honest, pc.checkpoint, TEST_BITS);
    REQUIRE(sync.ok);
    CHECK(sync.headers.size() == 6);

    struct Corrupted : HeaderSource {
        std::vector<BlockHeader> headers;
        std::vector<BlockHeader> get_headers(const Hash256&) override { return headers; }
        std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256&) override
        {
            return std::nullopt;
        }
    };

    Corrupted peer;

    // Broken linkage at suffix position 3 (height 4).
    peer.headers = sync.headers;
    peer.headers[3].prev_hash[0] ^= 1;
    SpvSync bad = spv_sync(peer, pc.checkpoint, TEST_BITS);
    CHECK(!bad.ok);
    CHECK(bad.fail_height == 4);
    CHECK(bad.fail_what == "broken linkage");

    // Declared difficulty differs from the network constant.
    peer.headers = sync.headers;
    peer.headers[2].bits = COMPACT_ALWAYS_PASS;
    bad = spv_sync(peer, pc.checkpoint, TEST_BITS);
    CHECK(!bad.ok);
    CHECK(bad.fail_height == 3);
    CHECK(bad.fail_what == "unexpected difficulty");

    // Work check: bump the tip nonce until its hash misses the target.
    peer.headers = sync.headers;
    BlockHeader& tip = peer.headers.back();
    while (tip.meets_target()) ++tip.pow_nonce;
    bad = spv_sync(peer, pc.checkpoint, TEST_BITS);
    CHECK(!bad.ok);
    CHECK(bad.fail_height == 6);
    CHECK(bad.fail_what == "hash above target");

    // Unknown checkpoint: peer answers nothing, sync trivially succeeds with
    // zero headers and verification then refuses on depth.
    Checkpoint alien{sha256(Bytes{1, 2, 3}), 0};
    SpvSync empty = spv_sync(honest, alien, TEST_BITS);
    CHECK(empty.ok);
    CHECK(empty.headers.empty());
}

TEST_CASE("spv payment verification enforces depth and evidence")
{
    ReleaseRig rig;

    SUBCASE("six confirmations release, five refuse")
    {
        PaidChain six = build_paid_chain(rig, 5, rig.md);
        ChainHeaderSource peer(six.chain);
        ReleaseDecision d =
            spv_verify_payment(rig.ctx, peer, rig.wallet, six.txid, policy_for(six, 6));
        CHECK(d.released);
        REQUIRE(d.vk_prv);
        CHECK(same_bytes(d.vk_prv->span(), rig.vk_prv_truth.span()));

        ReleaseRig rig5(0x35);
        PaidChain five = build_paid_chain(rig5, 4, rig5.md);
        ChainHeaderSource peer5(five.chain);
        ReleaseDecision d5 =
            spv_verify_payment(rig5.ctx, peer5, rig5.wallet, five.txid, policy_for(five, 6));
        CHECK(!d5.released);
        CHECK(d5.reason == RefusalReason::InsufficientConfirmations);
        CHECK(!rig5.vk_leaked());
    }

    SUBCASE("monotonicity in both policy knobs")
    {
        PaidChain pc = build_paid_chain(rig, 6, rig.md); // 7 confirmations, 6 above
        for (uint32_t m : {7u, 6u, 3u, 1u}) {
            for (uint32_t n : {6u, 4u, 0u}) {
                ChainHeaderSource peer(pc.chain);
                ReleaseDecision d =
                    spv_verify_payment(rig.ctx, peer, rig.wallet, pc.txid, policy_for(pc, m, n));
                CHECK(d.released);
            }
        }
    }

    SUBCASE("unknown txid")
    {
        PaidChain pc = build_paid_chain(rig, 5, rig.md);
        ChainHeaderSource peer(pc.chain);
        Hash256 ghost = sha256(Bytes{9, 9, 9});
        ReleaseDecision d = spv_verify_payment(rig.ctx, peer, rig.wallet, ghost, policy_for(pc, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::NoPayment);
    }

    SUBCASE("tampered merkle proof")
    {
        PaidChain pc = build_paid_chain(rig, 5, rig.md);

        struct TamperedProof : HeaderSource {
            ChainHeaderSource inner;
            explicit TamperedProof(Chain c) : inner(std::move(c)) {}
            std::vector<BlockHeader> get_headers(const Hash256& from) override
            {
                return inner.get_headers(from);
            }
            std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256& txid) override
            {
                auto mb = inner.get_merkle_block(txid);
                if (mb && !mb->proof.siblings.empty())
                    mb->proof.siblings[0].digest[0] ^= 1;
                else if (mb)
                    mb->proof.leaf_txid[0] ^= 1;
                return mb;
            }
        };

        TamperedProof peer(pc.chain);
        ReleaseDecision d =
            spv_verify_payment(rig.ctx, peer, rig.wallet, pc.txid, policy_for(pc, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::BadProof);
    }

    SUBCASE("payment to the wrong wallet")
    {
        PaidChain pc = build_paid_chain(rig, 5, rig.md);
        ChainHeaderSource peer(pc.chain);
        Hash160 other;
        other.fill(0x12);
        ReleaseDecision d = spv_verify_payment(rig.ctx, peer, other, pc.txid, policy_for(pc, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::NoPayment);
    }

    SUBCASE("payment carrying a foreign nonce")
    {
        ReleaseMetadata foreign = rig.md;
        foreign.nonce[5] ^= 0x80;
        PaidChain pc = build_paid_chain(rig, 5, foreign);
        ChainHeaderSource peer(pc.chain);
        ReleaseDecision d = spv_verify_payment(rig.ctx, peer, rig.wallet, pc.txid, policy_for(pc, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::NonceMismatch);
        CHECK(!rig.vk_leaked());
    }

    SUBCASE("unavailable peer")
    {
        struct DeadPeer : HeaderSource {
            std::vector<BlockHeader> get_headers(const Hash256&) override
            {
                throw TransportError("connection refused");
            }
            std::optional<MerkleBlockAnswer> get_merkle_block(const Hash256&) override
            {
                throw TransportError("connection refused");
            }
        };
        PaidChain pc = build_paid_chain(rig, 5, rig.md);
        DeadPeer peer;
        ReleaseDecision d = spv_verify_payment(rig.ctx, peer, rig.wallet, pc.txid, policy_for(pc, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::EndpointUnavailable);
    }
}

TEST_CASE("forged suffixes price the n_extra counter-measure")
{
    ReleaseRig rig;
    SimClock clock;
    Chain honest = Chain::genesis(TEST_BITS, clock.tick());
    Checkpoint cp{honest.tip().header.hash(), honest.height()};
    Transaction pay = build_payment_tx(rig.wallet, 50000, rig.md.serialize());

    ReleasePolicy policy;
    policy.min_confirmations = 6;
    policy.n_extra_blocks = 6;
    policy.checkpoint = cp;
    policy.expected_bits = TEST_BITS;

    auto forge = [&](uint64_t n_extra) {
        FakeChainResult fake =
            mine_fake_chain(cp.hash, cp.height, pay, n_extra, TEST_BITS, clock);
        Chain forged = honest;
        for (const Block& b : fake.blocks) forged = forged.with_block(b);
        return forged;
    };

    ChainHeaderSource five(forge(5));
    ReleaseDecision d5 = spv_verify_payment(rig.ctx, five, rig.wallet, pay.txid(), policy);
    CHECK(!d5.released);
    CHECK(d5.reason == RefusalReason::InsufficientConfirmations);

    ChainHeaderSource six(forge(6));
    ReleaseDecision d6 = spv_verify_payment(rig.ctx, six, rig.wallet, pay.txid(), policy);
    CHECK(d6.released);
}

namespace {

struct ScriptedExplorer : ExplorerSource {
    ExplorerTxInfo answer;
    ExplorerTxInfo get_tx(const Hash160&, const Hash256&) override { return answer; }
};

struct DeadExplorer : ExplorerSource {
    ExplorerTxInfo get_tx(const Hash160&, const Hash256&) override
    {
        throw TransportError("connection refused");
    }
};

struct ImpostorExplorer : ExplorerSource {
    ExplorerTxInfo get_tx(const Hash160&, const Hash256&) override
    {
        throw UntrustedEndpointError("certificate does not chain to a pinned anchor");
    }
};

} // namespace

TEST_CASE("scheme 3 trusts only a pinned, reachable endpoint")
{
    ReleaseRig rig;
    PaidChain pc = build_paid_chain(rig, 5, rig.md);
    ReleasePolicy policy = policy_for(pc, 6);

    SUBCASE("honest explorer at depth 6")
    {
        ChainExplorerSource explorer(pc.chain);
        ReleaseDecision d =
            scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, pc.txid, policy);
        CHECK(d.released);
        REQUIRE(d.vk_prv);
        CHECK(same_bytes(d.vk_prv->span(), rig.vk_prv_truth.span()));
    }

    SUBCASE("five confirmations refuse")
    {
        ReleaseRig rig5(0x36);
        PaidChain five = build_paid_chain(rig5, 4, rig5.md);
        ChainExplorerSource explorer(five.chain);
        ReleaseDecision d = scheme3_verify_and_release(rig5.ctx, explorer, rig5.wallet, five.txid,
                                                       policy_for(five, 6));
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::InsufficientConfirmations);
    }

    SUBCASE("non-pinned endpoint")
    {
        ImpostorExplorer explorer;
        ReleaseDecision d =
            scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, pc.txid, policy);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::UntrustedEndpoint);
        CHECK(!rig.vk_leaked());
    }

    SUBCASE("dead endpoint")
    {
        DeadExplorer explorer;
        ReleaseDecision d =
            scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, pc.txid, policy);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::EndpointUnavailable);
    }

    SUBCASE("a lying honest-channel explorer fools scheme 3 until combined mode")
    {
        // The victim never paid: craft the payment locally and have the
        // explorer vouch for it.
        Transaction unpaid = build_payment_tx(rig.wallet, 50000, rig.md.serialize());
        SimClock clock;
        Chain empty_chain = Chain::genesis(TEST_BITS, clock.tick());
        Checkpoint cp{empty_chain.tip().header.hash(), empty_chain.height()};
        ReleasePolicy lie_policy;
        lie_policy.min_confirmations = 6;
        lie_policy.checkpoint = cp;
        lie_policy.expected_bits = TEST_BITS;

        ScriptedExplorer liar;
        liar.answer.found = true;
        liar.answer.tx = unpaid;
        liar.answer.confirmations = 6;

        ReleaseDecision alone = scheme3_verify_and_release(rig.ctx, liar, rig.wallet,
                                                           unpaid.txid(), lie_policy);
        CHECK(alone.released); // the scheme-3 weakness, on display

        ReleaseRig fresh(0x37);
        ScriptedExplorer liar2;
        Transaction unpaid2 = build_payment_tx(fresh.wallet, 50000, fresh.md.serialize());
        liar2.answer.found = true;
        liar2.answer.tx = unpaid2;
        liar2.answer.confirmations = 6;
        ChainHeaderSource honest_peer(empty_chain);
        ReleaseDecision combined = scheme3_verify_and_release(
            fresh.ctx, liar2, fresh.wallet, unpaid2.txid(), lie_policy, &honest_peer);
        CHECK(!combined.released);
        CHECK(combined.reason == RefusalReason::NoPayment);
        CHECK(!fresh.vk_leaked());
    }

    SUBCASE("fabricated transaction that does not hash to the queried txid")
    {
        ScriptedExplorer liar;
        liar.answer.found = true;
        liar.answer.tx = build_payment_tx(rig.wallet, 1, rig.md.serialize());
        liar.answer.confirmations = 6;
        ReleaseDecision d =
            scheme3_verify_and_release(rig.ctx, liar, rig.wallet, pc.txid, policy);
        CHECK(!d.released);
        CHECK(d.reason == RefusalReason::BadProof);
    }
}

TEST_CASE("refusal reasons have stable names")
{
    CHECK(std::string(refusal_reason_name(RefusalReason::NoPayment)) == "no-payment");
    CHECK(std::string(refusal_reason_name(RefusalReason::InsufficientConfirmations)) ==
          "insufficient-confirmations");
    CHECK(std::string(refusal_reason_name(RefusalReason::BadSignature)) == "bad-signature");
    CHECK(std::string(refusal_reason_name(RefusalReason::NonceMismatch)) == "nonce-mismatch");
    CHECK(std::string(refusal_reason_name(RefusalReason::InvalidHeaderChain)) ==
          "invalid-header-chain");
    CHECK(std::string(refusal_reason_name(RefusalReason::BadProof)) == "bad-proof");
    CHECK(std::string(refusal_reason_name(RefusalReason::UntrustedEndpoint)) ==
          "untrusted-endpoint");
    CHECK(std::string(refusal_reason_name(RefusalReason::EndpointUnavailable)) ==
          "endpoint-unavailable");
}

TEST_CASE("ransom note lists the payment facts")
{
    RansomNoteInfo info;
    info.wallet.fill(0xA1);
    info.amount = 123456;
    info.metadata.ak_fp.fill(0xB2);
    info.metadata.vk_fp.fill(0xC3);
    info.metadata.nonce.fill(0xD4);
    info.min_confirmations = 6;

    std::string note = make_ransom_note(info);
    CHECK(note.find("wallet-address: " + to_hex(info.wallet)) != std::string::npos);
    CHECK(note.find("amount: 123456") != std::string::npos);
    CHECK(note.find("enclave-nonce: " + to_hex(info.metadata.nonce)) != std::string::npos);
    CHECK(note.find("payment-metadata: " + to_hex(info.metadata.serialize())) != std::string::npos);
    CHECK(note.find("min-confirmations: 6") != std::string::npos);
    CHECK(note.find("simulator") != std::string::npos);
}
