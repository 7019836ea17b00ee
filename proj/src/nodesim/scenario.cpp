// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/nodesim/scenario.hpp>

#include <escrowsim/chainkit/mine.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/nodesim/clients.hpp>
#include <escrowsim/nodesim/services.hpp>
#include <escrowsim/release/protocol.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/u256.hpp>

namespace escrowsim {

namespace {

const uint32_t SCENARIO_BITS = compact_from_pow2(244);

// A provisioned victim enclave with every key drawn from the scenario DRBG,
// so transcripts never depend on process randomness.
struct ScenarioRig {
    ExposureLedger ledger;
    EnclaveBoundary boundary;
    Bytes ak_pub_der;
    Hash160 wallet{};
    Bytes vk_pub;
    SealedBlob sealed_vk;
    Hash256 nonce{};
    ReleaseMetadata md;
    ReleaseContext ctx;

    ScenarioRig(HmacDrbg& drbg, const DeviceSecret& device)
        : boundary(device.clone(), &ledger)
    {
        ak_pub_der = drbg.bytes(64);
        wallet = wallet_from_key(ak_pub_der);
        X25519KeyPair vk = X25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
        vk_pub = vk.pub;
        sealed_vk = seal(device, VK_SEAL_LABEL, vk.priv.span());
        nonce = drbg.hash256();

        md.ak_fp = fingerprint20(ak_pub_der);
        md.vk_fp = fingerprint20(vk_pub);
        md.nonce = nonce;

        ctx.boundary = &boundary;
        ctx.sealed_vk = sealed_vk;
        ctx.vk_pub = vk_pub;
        ctx.ak_pub_der = ak_pub_der;
        ctx.nonce = nonce;
        ctx.wallet = wallet;
    }
};

struct ScenarioChain {
    Chain chain;
    Checkpoint checkpoint;
    Transaction payment;
    Hash256 txid{};
};

// Genesis checkpoint; the payment lands at height 1 when paid is set,
// filler blocks bring the tip to the same height either way.
ScenarioChain build_chain(const ScenarioRig& rig, bool paid, size_t blocks_above_payment)
{
    SimClock clock;
    Chain chain = Chain::genesis(SCENARIO_BITS, clock.tick());
    Checkpoint cp{chain.tip().header.hash(), chain.height()};

    Transaction pay = build_payment_tx(rig.wallet, 50000, rig.md.serialize());
    if (paid) chain = chain.with_block(mine_block(cp.hash, {pay}, clock.tick(), SCENARIO_BITS).block);
    while (chain.height() < 1 + blocks_above_payment)
        chain = chain.with_block(mine_block(chain.tip().header.hash(),
                                            {make_marker_tx(chain.height() + 1)}, clock.tick(),
                                            SCENARIO_BITS)
                                     .block);
    const Hash256 txid = pay.txid();
    return ScenarioChain{std::move(chain), cp, std::move(pay), txid};
}

ReleasePolicy scenario_policy(const Checkpoint& cp)
{
    ReleasePolicy policy;
    policy.min_confirmations = 6;
    policy.n_extra_blocks = 2;
    policy.checkpoint = cp;
    policy.expected_bits = SCENARIO_BITS;
    return policy;
}

std::string endpoint_for(const ScenarioConfig& cfg, const std::string& role)
{
    if (cfg.transport == "tcp") return "tcp:127.0.0.1:0";
    if (cfg.transport == "local") return "local:" + cfg.name + "-" + role;
    throw ValidationError("unknown transport: " + cfg.transport);
}

// An endpoint with nothing behind it; for tcp, a freshly released port.
std::string dead_endpoint(const ScenarioConfig& cfg, const std::string& role)
{
    if (cfg.transport == "tcp") {
        ListenerPtr probe = listen("tcp:127.0.0.1:0");
        std::string ep = probe->endpoint();
        probe->stop();
        return ep;
    }
    return endpoint_for(cfg, role + "-down");
}

void log_decision(MessageLog& log, const std::string& label, const ReleaseDecision& d)
{
    if (d.released)
        log.note(label + ": released");
    else
        log.note(label + ": refused reason=" + refusal_reason_name(d.reason));
}

ScenarioResult finish(const ScenarioConfig& cfg, MessageLog& log, const ReleaseDecision& d)
{
    log_decision(log, "decision", d);
    ScenarioResult result;
    result.name = cfg.name;
    result.released = d.released;
    result.reason = d.reason;
    result.transcript = std::move(log.lines);
    return result;
}

ScenarioResult run_scheme2_honest(const ScenarioConfig& cfg, ScenarioRig& rig, MessageLog& log)
{
    ScenarioChain sc = build_chain(rig, true, 8);
    PeerService service(PeerBehavior::honest(sc.chain), endpoint_for(cfg, "peer"));
    PeerClient peer(service.endpoint(), &log);
    ReleaseDecision d =
        spv_verify_payment(rig.ctx, peer, rig.wallet, sc.txid, scenario_policy(sc.checkpoint));
    return finish(cfg, log, d);
}

ScenarioResult run_scheme2_mitm(const ScenarioConfig& cfg, ScenarioRig& rig, MessageLog& log)
{
    // The victim skips payment and feeds the enclave a self-mined suffix;
    // too shallow for the policy, and deepening it costs real mining work.
    ScenarioChain sc = build_chain(rig, true, 8);
    SimClock clock;
    clock.now += 86400;
    FakeChainResult fake = mine_fake_chain(sc.checkpoint.hash, sc.checkpoint.height, sc.payment, 3,
                                           SCENARIO_BITS, clock);
    std::vector<Block> forged{sc.chain.at(0)};
    forged.insert(forged.end(), fake.blocks.begin(), fake.blocks.end());
    log.note("peer serves a self-mined fork: " + std::to_string(fake.blocks.size()) +
             " blocks above the checkpoint");

    PeerService service(PeerBehavior::honest(Chain::from_blocks(std::move(forged))),
                        endpoint_for(cfg, "peer"));
    PeerClient peer(service.endpoint(), &log);
    ReleaseDecision d =
        spv_verify_payment(rig.ctx, peer, rig.wallet, sc.txid, scenario_policy(sc.checkpoint));
    return finish(cfg, log, d);
}

ScenarioResult run_scheme3_honest(const ScenarioConfig& cfg, ScenarioRig& rig, MessageLog& log,
                                  HmacDrbg& drbg)
{
    ScenarioChain sc = build_chain(rig, true, 8);
    Ed25519KeyPair anchor = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    Ed25519KeyPair endpoint_key = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    TrustAnchors anchors;
    anchors.add(anchor.pub);

    ExplorerService service(ExplorerBehavior::honest(sc.chain),
                            make_explorer_identity(anchor, "explorer.sim", std::move(endpoint_key)),
                            endpoint_for(cfg, "explorer"));
    ExplorerClient explorer(service.endpoint(), anchors, &log);
    ReleaseDecision d = scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, sc.txid,
                                                   scenario_policy(sc.checkpoint));
    return finish(cfg, log, d);
}

ScenarioResult run_scheme3_outage(const ScenarioConfig& cfg, ScenarioRig& rig, MessageLog& log,
                                  HmacDrbg& drbg)
{
    ScenarioChain sc = build_chain(rig, true, 8);
    Ed25519KeyPair anchor = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    TrustAnchors anchors;
    anchors.add(anchor.pub);

    log.note("explorer endpoint is down");
    ExplorerClient explorer(dead_endpoint(cfg, "explorer"), anchors, &log);
    ReleaseDecision d = scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, sc.txid,
                                                   scenario_policy(sc.checkpoint));
    return finish(cfg, log, d);
}

ScenarioResult run_scheme3_rogue(const ScenarioConfig& cfg, ScenarioRig& rig, MessageLog& log,
                                 HmacDrbg& drbg)
{
    ScenarioChain sc = build_chain(rig, true, 8);
    Ed25519KeyPair pinned = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    Ed25519KeyPair rogue = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    Ed25519KeyPair endpoint_key = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    TrustAnchors anchors;
    anchors.add(pinned.pub);

    log.note("explorer certificate is issued by an unpinned anchor");
    ExplorerService service(ExplorerBehavior::honest(sc.chain),
                            make_explorer_identity(rogue, "rogue.sim", std::move(endpoint_key)),
                            endpoint_for(cfg, "explorer"));
    ExplorerClient explorer(service.endpoint(), anchors, &log);
    ReleaseDecision d = scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, sc.txid,
                                                   scenario_policy(sc.checkpoint));
    return finish(cfg, log, d);
}

ScenarioResult run_scheme3_lying_combined(const ScenarioConfig& cfg, ScenarioRig& rig,
                                          MessageLog& log, HmacDrbg& drbg)
{
    // Nothing was paid: the real chain has no payment transaction, but the
    // victim crafts one locally and a lying explorer vouches for it.
    ScenarioChain sc = build_chain(rig, false, 8);
    Transaction crafted = build_payment_tx(rig.wallet, 50000, rig.md.serialize());
    Ed25519KeyPair anchor = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    Ed25519KeyPair endpoint_key = Ed25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));
    TrustAnchors anchors;
    anchors.add(anchor.pub);
    ReleasePolicy policy = scenario_policy(sc.checkpoint);

    ExplorerService explorer_service(
        ExplorerBehavior::lying(crafted, 9),
        make_explorer_identity(anchor, "explorer.sim", std::move(endpoint_key)),
        endpoint_for(cfg, "explorer"));
    PeerService peer_service(PeerBehavior::honest(sc.chain), endpoint_for(cfg, "peer"));

    log.note("lying explorer vouches for an unpaid transaction");
    ExplorerClient explorer(explorer_service.endpoint(), anchors, &log);
    ReleaseDecision alone =
        scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, crafted.txid(), policy);
    log_decision(log, "decision[explorer-only]", alone);

    log.note("combined mode cross-checks the answer against SPV");
    PeerClient peer(peer_service.endpoint(), &log);
    ReleaseDecision combined =
        scheme3_verify_and_release(rig.ctx, explorer, rig.wallet, crafted.txid(), policy, &peer);
    return finish(cfg, log, combined);
}

} // namespace

const std::vector<std::string>& scenario_names()
{
    static const std::vector<std::string> names{
        "scheme2-honest",  "scheme2-mitm",  "scheme3-honest",
        "scheme3-outage",  "scheme3-rogue", "scheme3-lying-combined",
    };
    return names;
}

ScenarioResult run_scenario(const ScenarioConfig& config)
{
    HmacDrbg drbg(config.seed, "scenario:" + config.name);
    DeviceSecret device = DeviceSecret::from_bytes(drbg.bytes(DEVICE_SECRET_SIZE));
    ScenarioRig rig(drbg, device);

    MessageLog log;
    log.note("scenario: " + config.name);
    log.note("seed: " + std::to_string(config.seed));
    log.note("wallet: " + to_hex(rig.wallet));

    if (config.name == "scheme2-honest") return run_scheme2_honest(config, rig, log);
    if (config.name == "scheme2-mitm") return run_scheme2_mitm(config, rig, log);
    if (config.name == "scheme3-honest") return run_scheme3_honest(config, rig, log, drbg);
    if (config.name == "scheme3-outage") return run_scheme3_outage(config, rig, log, drbg);
    if (config.name == "scheme3-rogue") return run_scheme3_rogue(config, rig, log, drbg);
    if (config.name == "scheme3-lying-combined")
        return run_scheme3_lying_combined(config, rig, log, drbg);
    throw ValidationError("unknown scenario: " + config.name);
}

} // namespace escrowsim
