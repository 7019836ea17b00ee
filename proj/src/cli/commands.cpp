// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/commands.hpp>

#include <escrowsim/chainkit/chain_io.hpp>
#include <escrowsim/chainkit/mine.hpp>
#include <escrowsim/cli/corpus.hpp>
#include <escrowsim/cli/state.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/cryptofile/bench.hpp>
#include <escrowsim/cryptofile/capture.hpp>
#include <escrowsim/cryptofile/engine.hpp>
#include <escrowsim/enclave/escrow.hpp>
#include <escrowsim/release/chain_source.hpp>
#include <escrowsim/release/note.hpp>
#include <escrowsim/release/verifier.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace escrowsim {

namespace {

namespace sfs = std::filesystem;

constexpr uint32_t GENESIS_TIMESTAMP = 1700000000;
constexpr uint32_t BLOCK_INTERVAL = 600;

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed6(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

ByteSpan str_span(const std::string& s)
{
    return ByteSpan(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

// Each command draws from its own deterministic stream so reruns reproduce
// it exactly and two commands never share prefix bytes.
uint64_t command_seed(const ExperimentConfig& config, std::string_view command)
{
    return HmacDrbg(config.seed, std::string("cli:") + std::string(command)).next_u64();
}

void require_corpus(const ExperimentConfig& config)
{
    if (config.corpus_root.empty())
        throw ValidationError("corpus root is required, pass --corpus");
}

void require_ack(const ExperimentConfig& config)
{
    if (!config.simulator_ack)
        throw ValidationError("refusing to encrypt without --i-understand-this-is-a-simulator");
}

void echo_config(RunReport& report, const ExperimentConfig& config)
{
    report.kv("seed", config.seed);
    report.kv("bits-exponent", uint64_t(config.bits_exponent));
    if (!config.corpus_root.empty()) report.kv("corpus", config.corpus_root.string());
}

SimState require_state(const ExperimentConfig& config)
{
    const sfs::path path = config.state_path();
    if (!sfs::exists(path))
        throw ValidationError("no simulation state at " + path.string() + ", run keygen first");
    return SimState::load(path);
}

Chain load_or_genesis(const ExperimentConfig& config)
{
    const sfs::path path = config.chain_path();
    if (!sfs::exists(path)) return Chain::genesis(config.bits(), GENESIS_TIMESTAMP);
    Chain chain = load_chain(path);
    if (chain.at(0).header.bits != config.bits())
        throw ValidationError("existing chain was mined at a different difficulty, remove " +
                              path.string() + " or match its bits-exponent");
    return chain;
}

uint32_t next_timestamp(const Chain& chain)
{
    return GENESIS_TIMESTAMP + BLOCK_INTERVAL * uint32_t(chain.height() + 1);
}

uint64_t append_block(Chain& chain, std::vector<Transaction> txs, uint32_t bits)
{
    MinedBlock mined =
        mine_block(chain.tip().header.hash(), std::move(txs), next_timestamp(chain), bits);
    chain = chain.with_block(std::move(mined.block));
    return mined.attempts;
}

EnclaveBoundary boundary_for(const ExperimentConfig& config, const SimState& state,
                             ExposureLedger* ledger)
{
    return EnclaveBoundary(DeviceSecret::from_bytes(state.device_secret), ledger,
                           config.transition_cost_us);
}

ReleasePolicy policy_for(const ExperimentConfig& config, const Chain& chain)
{
    ReleasePolicy policy;
    policy.min_confirmations = config.min_confirmations;
    policy.n_extra_blocks = config.n_extra_blocks;
    policy.checkpoint = {chain.at(0).header.hash(), 0};
    policy.expected_bits = config.bits();
    return policy;
}

// Stage bodies below are shared by the standalone commands and lifecycle.
// Lifecycle calls them directly so the deterministic scope opens only once.

SimState do_keygen(const ExperimentConfig& config, RunReport& report)
{
    require_corpus_sentinel(config.corpus_root);
    if (sfs::exists(config.state_path()))
        throw ValidationError("simulation state already exists at " +
                              config.state_path().string() + ", remove it to start a new run");

    SimState state;
    state.seed = config.seed;
    state.bits = config.bits();
    state.mode = config.mode;

    RsaKeyPair ak = RsaKeyPair::generate();
    state.ak_pub_der = ak.public_der();
    state.ak_prv_der = ak.private_der();
    state.wallet = wallet_from_key(state.ak_pub_der);

    DeviceSecret device = DeviceSecret::generate();
    state.device_secret.assign(device.bytes().begin(), device.bytes().end());

    ExposureLedger ledger;
    EnclaveBoundary boundary(device.clone(), &ledger, config.transition_cost_us);
    GenKeysResult keys = boundary.gen_victim_keypair(state.wallet);
    state.vk_pub = std::move(keys.vk_pub);
    state.sealed_vk = std::move(keys.sealed_vk);
    state.sealed_wallet = std::move(keys.sealed_wallet);
    state.nonce = boundary.gen_nonce();

    // The escrow copy lands on disk before anything else can fail.
    EscrowFile escrow{state.device_secret, state.vk_pub, state.sealed_vk, state.sealed_wallet};
    escrow.save(config.escrow_path());
    state.save(config.state_path());
    ledger.save(config.ledger_path());

    report.kv("attacker-key", "rsa-2048");
    report.kv("ak-fingerprint", to_hex(fingerprint20(state.ak_pub_der)));
    report.kv("vk-fingerprint", to_hex(fingerprint20(state.vk_pub)));
    report.kv("wallet", to_hex(state.wallet));
    report.kv("nonce", to_hex(state.nonce));
    report.kv("escrow", config.escrow_path().string());
    return state;
}

void do_encrypt(const ExperimentConfig& config, SimState& state, RunReport& report)
{
    require_ack(config);
    require_corpus_sentinel(config.corpus_root);

    ExposureLedger ledger = ExposureLedger::load_or_empty(config.ledger_path());
    EnclaveBoundary boundary = boundary_for(config, state, &ledger);

    const auto start = std::chrono::steady_clock::now();
    CorpusReport cr = encrypt_corpus(config.corpus_root, state.vk_pub, config.mode, boundary,
                                     !config.keep_originals);
    const double elapsed = seconds_since(start);

    ledger.save(config.ledger_path());
    if (!cr.completed)
        throw IoError("encrypt stopped after " + std::to_string(cr.files) +
                      " files: " + cr.error);

    state.mode = config.mode;
    state.save(config.state_path());

    const std::string note = make_ransom_note(
        {state.wallet, config.amount, state.metadata(), config.min_confirmations});
    write_file_atomic(config.note_path(), str_span(note));

    report.kv("mode", engine_mode_name(config.mode));
    report.kv("files", cr.files);
    report.kv("bytes", cr.bytes);
    report.kv("enclave-enters", cr.boundary.enter_count);
    report.kv("enclave-exits", cr.boundary.exit_count);
    report.kv("ledger-entries", uint64_t(ledger.size()));
    report.kv("note", config.note_path().string());
    report.volatile_kv("encrypt-seconds", elapsed);
}

void do_pay(const ExperimentConfig& config, SimState& state, uint32_t confirmations,
            RunReport& report)
{
    if (confirmations == 0) throw ValidationError("confirmations must be at least 1");
    if (state.has_payment())
        throw ValidationError("payment already recorded, state holds txid " +
                              to_hex(state.payment_txid));

    Chain chain = load_or_genesis(config);
    Transaction payment = build_payment_tx(state.wallet, config.amount, state.metadata().serialize());
    const Hash256 txid = payment.txid();

    uint64_t attempts = append_block(chain, {std::move(payment)}, config.bits());
    for (uint32_t i = 1; i < confirmations; ++i)
        attempts += append_block(chain, {make_marker_tx(chain.height() + 1)}, config.bits());

    save_chain(config.chain_path(), chain);
    state.payment_txid = txid;
    state.amount = config.amount;
    state.save(config.state_path());

    report.kv("txid", to_hex(txid));
    report.kv("amount", config.amount);
    report.kv("confirmations", uint64_t(confirmations));
    report.kv("chain-height", chain.height());
    report.kv("pow-attempts", attempts);
}

int do_sign(const ExperimentConfig& config, SimState& state, RunReport& report)
{
    Chain chain = load_or_genesis(config);
    const std::vector<PaymentHit> hits = attacker_scan(chain, state.ak_pub_der);
    report.kv("payments-found", uint64_t(hits.size()));

    const ReleaseMetadata md = state.metadata();
    const PaymentHit* match = nullptr;
    for (const PaymentHit& hit : hits) {
        if (hit.metadata == md && hit.amount >= config.amount) {
            match = &hit;
            break;
        }
    }
    if (match == nullptr) {
        report.line("decision: refused reason=no-payment");
        return EXIT_REFUSED;
    }

    RsaKeyPair ak = RsaKeyPair::from_private_der(state.ak_prv_der);
    state.signature = attacker_sign(match->metadata, ak);
    state.save(config.state_path());

    report.kv("txid", to_hex(match->txid));
    report.kv("amount", match->amount);
    report.kv("signature-bytes", uint64_t(state.signature.size()));
    report.kv("signature-sha256", to_hex(sha256(state.signature)));
    report.line("decision: signed");
    return EXIT_OK;
}

void do_publish(const ExperimentConfig& config, SimState& state, RunReport& report)
{
    if (state.signature.empty())
        throw ValidationError("no signature in state, run sign first");

    Chain chain = load_or_genesis(config);
    std::vector<Transaction> parts = publish_signature(state.signature, fingerprint20(state.vk_pub));
    report.kv("signature-parts", uint64_t(parts.size()));

    const uint64_t attempts = append_block(chain, std::move(parts), config.bits());
    save_chain(config.chain_path(), chain);

    report.kv("chain-height", chain.height());
    report.kv("pow-attempts", attempts);
}

int do_release(const ExperimentConfig& config, SimState& state, RunReport& report)
{
    Chain chain = load_or_genesis(config);
    ExposureLedger ledger = ExposureLedger::load_or_empty(config.ledger_path());
    EnclaveBoundary boundary = boundary_for(config, state, &ledger);

    ReleaseContext ctx;
    ctx.boundary = &boundary;
    ctx.sealed_vk = state.sealed_vk;
    ctx.vk_pub = state.vk_pub;
    ctx.ak_pub_der = state.ak_pub_der;
    ctx.nonce = state.nonce;
    ctx.wallet = state.wallet;

    report.kv("scheme", config.scheme);
    ReleaseDecision decision;
    if (config.scheme == "signed") {
        std::optional<Bytes> signature = find_signature(chain, fingerprint20(state.vk_pub));
        if (!signature && !state.signature.empty()) signature = state.signature;
        if (!signature)
            throw ValidationError("no signature on chain or in state, run sign and publish first");
        report.kv("signature-bytes", uint64_t(signature->size()));
        decision = scheme1_verify_and_release(ctx, state.metadata(), *signature);
    } else {
        if (!state.has_payment()) throw ValidationError("no payment recorded, run pay first");
        const ReleasePolicy policy = policy_for(config, chain);
        report.kv("min-confirmations", uint64_t(policy.min_confirmations));
        report.kv("extra-blocks", uint64_t(policy.n_extra_blocks));
        if (config.scheme == "spv") {
            ChainHeaderSource peer(chain);
            decision = spv_verify_payment(ctx, peer, state.wallet, state.payment_txid, policy);
        } else {
            report.kv("cross-check", config.cross_check ? "on" : "off");
            ChainExplorerSource explorer(chain);
            ChainHeaderSource cross(chain);
            decision = scheme3_verify_and_release(ctx, explorer, state.wallet, state.payment_txid,
                                                  policy, config.cross_check ? &cross : nullptr);
        }
    }

    ledger.save(config.ledger_path());
    if (!decision.released) {
        report.line(std::string("decision: refused reason=") +
                    refusal_reason_name(decision.reason));
        return EXIT_REFUSED;
    }

    state.vk_prv.assign(decision.vk_prv->span().begin(), decision.vk_prv->span().end());
    state.save(config.state_path());
    report.line("decision: released");
    report.kv("vk-fingerprint", to_hex(fingerprint20(state.vk_pub)));
    return EXIT_OK;
}

void do_decrypt(const ExperimentConfig& config, const SimState& state, RunReport& report)
{
    require_corpus_sentinel(config.corpus_root);
    if (state.vk_prv.empty())
        throw ValidationError("victim private key not in state, run release or recover first");

    const auto start = std::chrono::steady_clock::now();
    DecryptReport dr = decrypt_corpus(config.corpus_root, state.vk_prv, !config.keep_originals);
    const double elapsed = seconds_since(start);

    if (!dr.completed)
        throw IoError("decrypt stopped after " + std::to_string(dr.files) +
                      " files: " + dr.error);

    report.kv("files", dr.files);
    report.kv("bytes", dr.bytes);
    report.volatile_kv("decrypt-seconds", elapsed);
}

// Rethrows with a stage prefix so a lifecycle failure names its stage
// without collapsing the exception type.
template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn())
{
    const auto tag = [name](const std::exception& e) {
        return std::string(name) + ": " + e.what();
    };
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(tag(e));
    } catch (const ParseError& e) {
        throw ParseError(tag(e));
    } catch (const AuthenticationError& e) {
        throw AuthenticationError(tag(e));
    } catch (const CryptoError& e) {
        throw CryptoError(tag(e));
    } catch (const TransportError& e) {
        throw TransportError(tag(e));
    } catch (const IoError& e) {
        throw IoError(tag(e));
    }
}

int do_lifecycle(const ExperimentConfig& config, RunReport& report)
{
    require_ack(config);

    const sfs::path root = config.corpus_root;
    if (!sfs::exists(root) || sfs::is_empty(root)) {
        const uint64_t bytes = make_corpus(root, config.profile, config.profile_files, config.seed);
        report.kv("corpus-profile", config.profile);
        report.kv("corpus-bytes", bytes);
    }
    require_corpus_sentinel(root);

    const std::vector<sfs::path> files = list_corpus_files(root);
    if (files.empty()) throw ValidationError("corpus root has no files to protect");
    std::vector<std::pair<sfs::path, Hash256>> before;
    before.reserve(files.size());
    for (const sfs::path& path : files) before.emplace_back(path, sha256(read_file(path)));

    report.kv("corpus-files", uint64_t(files.size()));
    report.kv("scheme", config.scheme);
    report.kv("mode", engine_mode_name(config.mode));

    report.blank();
    report.line("stage: keygen");
    SimState state = stage("keygen", [&] { return do_keygen(config, report); });

    report.blank();
    report.line("stage: encrypt");
    stage("encrypt", [&] { do_encrypt(config, state, report); });

    report.blank();
    report.line("stage: pay");
    const uint32_t depth = std::max(config.min_confirmations, config.n_extra_blocks + 1);
    stage("pay", [&] { do_pay(config, state, depth, report); });

    if (config.scheme == "signed") {
        report.blank();
        report.line("stage: sign");
        const int rc = stage("sign", [&] { return do_sign(config, state, report); });
        if (rc != EXIT_OK) {
            report.line("recovery: victim key remains recoverable from " +
                        config.escrow_path().string());
            return rc;
        }
        report.blank();
        report.line("stage: publish");
        stage("publish", [&] { do_publish(config, state, report); });
    }

    report.blank();
    report.line("stage: release");
    const int rc = stage("release", [&] { return do_release(config, state, report); });
    if (rc != EXIT_OK) {
        report.line("recovery: victim key remains recoverable from " +
                    config.escrow_path().string());
        return rc;
    }

    report.blank();
    report.line("stage: decrypt");
    stage("decrypt", [&] { do_decrypt(config, state, report); });

    report.blank();
    report.line("stage: verify");
    for (const auto& [path, digest] : before) {
        if (!sfs::exists(path))
            throw CryptoError("recovered corpus is missing " + path.string());
        if (sha256(read_file(path)) != digest)
            throw CryptoError("recovered file differs from the original: " + path.string());
    }
    report.kv("recovered-files", uint64_t(before.size()));
    report.line("recovery: byte-identical");
    return EXIT_OK;
}

} // namespace

CommandOutcome cmd_keygen(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "keygen"));
    RunReport report("keygen");
    echo_config(report, config);
    do_keygen(config, report);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_chain_mine(const ExperimentConfig& config, uint64_t blocks)
{
    config.validate();
    require_corpus(config);
    require_corpus_sentinel(config.corpus_root);
    DeterministicRandScope rand(command_seed(config, "chain-mine"));
    RunReport report("chain mine");
    echo_config(report, config);

    Chain chain = load_or_genesis(config);
    uint64_t attempts = 0;
    for (uint64_t i = 0; i < blocks; ++i)
        attempts += append_block(chain, {make_marker_tx(chain.height() + 1)}, config.bits());
    save_chain(config.chain_path(), chain);

    report.kv("blocks-added", blocks);
    report.kv("chain-height", chain.height());
    report.kv("tip", to_hex(chain.tip().header.hash()));
    report.kv("pow-attempts", attempts);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_encrypt(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "encrypt"));
    RunReport report("encrypt");
    echo_config(report, config);
    SimState state = require_state(config);
    do_encrypt(config, state, report);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_pay(const ExperimentConfig& config, uint32_t confirmations)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "pay"));
    RunReport report("pay");
    echo_config(report, config);
    SimState state = require_state(config);
    do_pay(config, state, confirmations, report);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_sign(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "sign"));
    RunReport report("sign");
    echo_config(report, config);
    SimState state = require_state(config);
    const int rc = do_sign(config, state, report);
    return {std::move(report), rc};
}

CommandOutcome cmd_publish(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "publish"));
    RunReport report("publish");
    echo_config(report, config);
    SimState state = require_state(config);
    do_publish(config, state, report);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_release(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "release"));
    RunReport report("release");
    echo_config(report, config);
    SimState state = require_state(config);
    const int rc = do_release(config, state, report);
    return {std::move(report), rc};
}

CommandOutcome cmd_decrypt(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "decrypt"));
    RunReport report("decrypt");
    echo_config(report, config);
    SimState state = require_state(config);
    do_decrypt(config, state, report);
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_recover(const ExperimentConfig& config, const std::filesystem::path& escrow_path)
{
    config.validate();
    require_corpus(config);
    require_corpus_sentinel(config.corpus_root);
    DeterministicRandScope rand(command_seed(config, "recover"));
    RunReport report("recover");
    echo_config(report, config);

    EscrowFile escrow = EscrowFile::load(escrow_path);
    SecureBytes vk_prv = escrow.recover_vk_priv();

    SimState state;
    if (sfs::exists(config.state_path())) {
        state = SimState::load(config.state_path());
        if (state.vk_pub != escrow.vk_pub)
            throw ValidationError("escrow file does not match this simulation's victim key");
    } else {
        state.seed = config.seed;
        state.bits = config.bits();
        state.device_secret = escrow.device_secret;
        state.vk_pub = escrow.vk_pub;
        state.sealed_vk = escrow.sealed_vk;
        state.sealed_wallet = escrow.sealed_wallet;
    }
    state.vk_prv.assign(vk_prv.span().begin(), vk_prv.span().end());
    state.save(config.state_path());

    report.kv("escrow", escrow_path.string());
    report.kv("vk-fingerprint", to_hex(fingerprint20(escrow.vk_pub)));
    report.line("recovery: victim key restored from escrow");
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_bench(const ExperimentConfig& config)
{
    config.validate();
    DeterministicRandScope rand(command_seed(config, "bench"));
    RunReport report("bench");
    report.kv("seed", config.seed);
    report.kv("files-per-size", config.bench_files);
    report.kv("scale-divisor", config.bench_scale_divisor);
    report.kv("transition-cost-us", uint64_t(config.transition_cost_us));

    static constexpr uint64_t LADDER_MB[] = {15, 50, 100, 150, 200, 250};
    for (const uint64_t mb : LADDER_MB) {
        const uint64_t file_bytes =
            std::max<uint64_t>(mb * (uint64_t(1) << 20) / config.bench_scale_divisor, 4096);
        BenchResult r =
            run_bench({config.bench_files, file_bytes, config.transition_cost_us, config.seed});

        report.blank();
        report.line("size: " + std::to_string(mb) + "mb scaled-file-bytes=" +
                    std::to_string(file_bytes));
        report.kv("crossings-reactive", r.reactive.crossings);
        report.kv("crossings-proactive", r.proactive.crossings);
        report.kv("modeled-extra-seconds", r.modeled_extra_seconds);
        report.volatile_kv("encrypt-seconds-reactive", r.reactive.encrypt_seconds);
        report.volatile_kv("encrypt-seconds-proactive", r.proactive.encrypt_seconds);
        report.volatile_kv("decrypt-seconds-reactive", r.reactive.decrypt_seconds);
        report.volatile_kv("decrypt-seconds-proactive", r.proactive.decrypt_seconds);
        report.volatile_kv("measured-extra-seconds", r.measured_extra_seconds);
        if (config.transition_cost_us > 0) report.volatile_kv("model-ratio", r.model_ratio);
        report.volatile_kv("encrypt-overhead", r.encrypt_overhead);
        report.volatile_kv("decrypt-overhead", r.decrypt_overhead);
    }

    report.blank();
    report.line("reference: hardware enclaves measure 12.76% encrypt / 34.05% decrypt overhead; "
                "a reference point for this software model, not a target");
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_capture(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    require_corpus_sentinel(config.corpus_root);
    DeterministicRandScope rand(command_seed(config, "capture"));
    RunReport report("capture");
    echo_config(report, config);

    SimState state = require_state(config);
    SecureBytes holder;
    ByteSpan vk_prv;
    if (!state.vk_prv.empty()) {
        vk_prv = ByteSpan(state.vk_prv.data(), state.vk_prv.size());
    } else if (sfs::exists(config.escrow_path())) {
        holder = EscrowFile::load(config.escrow_path()).recover_vk_priv();
        vk_prv = holder.span();
    } else {
        throw ValidationError("victim private key not available, run release or keep the escrow");
    }

    const ExposureLedger ledger = ExposureLedger::load_or_empty(config.ledger_path());
    const CaptureResult result = capture_experiment(config.corpus_root, vk_prv, ledger);

    report.kv("mode", engine_mode_name(state.mode));
    report.kv("envelopes", result.envelopes);
    report.kv("exposed-keys", result.exposed_keys);
    const double rate =
        result.envelopes ? 100.0 * double(result.exposed_keys) / double(result.envelopes) : 0.0;
    report.kv("exposure-rate-percent", rate);
    report.kv("vk-prv-exposed", result.vk_prv_exposed ? "yes" : "no");
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_fake_chain_cost(const ExperimentConfig& config)
{
    config.validate();
    DeterministicRandScope rand(command_seed(config, "fake-chain-cost"));
    RunReport report("fake-chain-cost");
    report.kv("seed", config.seed);
    report.kv("bits-exponent", uint64_t(config.bits_exponent));
    report.kv("trials-per-point", uint64_t(config.fake_trials));

    HmacDrbg drbg(config.seed, "fake-chain-cost");
    Hash160 wallet;
    drbg.fill(wallet);
    ReleaseMetadata md;
    drbg.fill(md.ak_fp);
    drbg.fill(md.vk_fp);
    md.nonce = drbg.hash256();
    const Transaction payment = build_payment_tx(wallet, config.amount, md.serialize());

    std::vector<double> xs, ys;
    for (const uint32_t n : config.fake_n_values) {
        uint64_t total = 0;
        for (uint32_t t = 0; t < config.fake_trials; ++t) {
            const Hash256 checkpoint = drbg.hash256();
            const FakeChainResult fake =
                mine_fake_chain(checkpoint, 100, payment, n, config.bits(), SimClock{});
            total += fake.total_attempts;
        }
        const double mean = double(total) / double(config.fake_trials);
        xs.push_back(double(n));
        ys.push_back(mean);
        report.line("point: n-extra=" + std::to_string(n) + " blocks=" + std::to_string(n + 1) +
                    " mean-attempts=" + fixed6(mean));
    }

    if (xs.size() >= 2) {
        const double n = double(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double denom = n * sxx - sx * sx;
        if (denom != 0) {
            const double slope = (n * sxy - sx * sy) / denom;
            const double intercept = (sy - slope * sx) / n;
            double ss_res = 0, ss_tot = 0;
            const double mean_y = sy / n;
            for (size_t i = 0; i < xs.size(); ++i) {
                const double fit = slope * xs[i] + intercept;
                ss_res += (ys[i] - fit) * (ys[i] - fit);
                ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
            }
            const double r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
            report.kv("fit-attempts-per-extra-block", slope);
            report.kv("fit-intercept", intercept);
            report.kv("fit-r-squared", r2);
        }
    }

    // Enforcement cliff: a forgery one block short of the policy is refused,
    // the full-depth forgery is accepted. The cost of release is the fit line.
    const uint32_t max_n =
        *std::max_element(config.fake_n_values.begin(), config.fake_n_values.end());
    if (max_n >= 1) {
        const Chain base = Chain::genesis(config.bits(), GENESIS_TIMESTAMP);
        const Hash256 root_hash = base.tip().header.hash();

        DeviceSecret device = DeviceSecret::from_bytes(drbg.bytes(DEVICE_SECRET_SIZE));
        ExposureLedger ledger;
        EnclaveBoundary boundary(device.clone(), &ledger);
        X25519KeyPair vk = X25519KeyPair::from_private(drbg.bytes(32));

        ReleaseContext ctx;
        ctx.boundary = &boundary;
        ctx.sealed_vk = seal(device, VK_SEAL_LABEL, vk.priv.span());
        ctx.vk_pub = vk.pub;
        ctx.ak_pub_der = drbg.bytes(64);
        ctx.nonce = md.nonce;
        ctx.wallet = wallet;

        const ReleasePolicy policy{1, max_n, {root_hash, 0}, config.bits()};
        const auto decide = [&](uint64_t forged_extra) {
            FakeChainResult forged =
                mine_fake_chain(root_hash, 0, payment, forged_extra, config.bits(),
                                SimClock{GENESIS_TIMESTAMP + BLOCK_INTERVAL, BLOCK_INTERVAL});
            std::vector<Block> blocks = base.blocks();
            for (Block& b : forged.blocks) blocks.push_back(std::move(b));
            ChainHeaderSource peer(Chain::from_blocks(std::move(blocks)));
            return spv_verify_payment(ctx, peer, wallet, payment.txid(), policy);
        };

        const ReleaseDecision short_one = decide(max_n - 1);
        const ReleaseDecision full = decide(max_n);
        const auto verdict = [](const ReleaseDecision& d) {
            return d.released ? std::string("released")
                              : "refused reason=" + std::string(refusal_reason_name(d.reason));
        };
        report.line("enforcement: policy-extra=" + std::to_string(max_n) + " forged-extra=" +
                    std::to_string(max_n - 1) + " decision=" + verdict(short_one));
        report.line("enforcement: policy-extra=" + std::to_string(max_n) + " forged-extra=" +
                    std::to_string(max_n) + " decision=" + verdict(full));
    }
    return {std::move(report), EXIT_OK};
}

CommandOutcome cmd_lifecycle(const ExperimentConfig& config)
{
    config.validate();
    require_corpus(config);
    DeterministicRandScope rand(command_seed(config, "lifecycle"));
    RunReport report("lifecycle");
    echo_config(report, config);
    const int rc = do_lifecycle(config, report);
    return {std::move(report), rc};
}

} // namespace escrowsim
