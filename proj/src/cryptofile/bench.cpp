// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/cryptofile/bench.hpp>
#include <escrowsim/support/errors.hpp>

#include <chrono>
#include <vector>

namespace escrowsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

BenchModeResult run_mode(EngineMode mode, const std::vector<Bytes>& corpus,
                         const X25519KeyPair& vk, const DeviceSecret& device,
                         uint64_t cost_us)
{
    BenchModeResult result;
    result.mode = mode;

    ExposureLedger ledger;
    EnclaveBoundary boundary(device.clone(), &ledger, static_cast<uint32_t>(cost_us));
    BoundaryStats before = boundary.stats();

    std::vector<Bytes> envelopes;
    envelopes.reserve(corpus.size());
    auto enc_start = Clock::now();
    for (const Bytes& contents : corpus)
        envelopes.push_back(envelope_encrypt(contents, vk.pub, mode, boundary));
    result.encrypt_seconds = seconds_since(enc_start);

    BoundaryStats after = boundary.stats();
    result.crossings = (after.enter_count + after.exit_count) -
                       (before.enter_count + before.exit_count);

    auto dec_start = Clock::now();
    for (size_t i = 0; i < envelopes.size(); ++i) {
        Bytes plain = envelope_decrypt(envelopes[i], vk.priv.span());
        if (plain != corpus[i]) throw CryptoError("bench round trip produced different bytes");
        result.bytes += plain.size();
        result.files += 1;
    }
    result.decrypt_seconds = seconds_since(dec_start);
    return result;
}

} // namespace

uint64_t modeled_crossings(EngineMode mode, uint64_t file_bytes)
{
    uint64_t chunks = file_bytes == 0 ? 1 : (file_bytes + ENVELOPE_CHUNK_SIZE - 1) / ENVELOPE_CHUNK_SIZE;
    // Reactive crosses once (key request); proactive crosses per chunk plus
    // the begin and end calls. Each call is one enter and one exit.
    if (mode == EngineMode::Reactive) return 2;
    return 2 * (chunks + 2);
}

BenchResult run_bench(const BenchConfig& config)
{
    BenchResult result;
    result.config = config;

    HmacDrbg drbg(config.seed, "bench-corpus");
    DeviceSecret device = DeviceSecret::from_bytes(drbg.bytes(DEVICE_SECRET_SIZE));
    X25519KeyPair vk = X25519KeyPair::from_private(drbg.bytes(CURVE25519_KEY_SIZE));

    std::vector<Bytes> corpus;
    corpus.reserve(config.files);
    for (uint64_t i = 0; i < config.files; ++i)
        corpus.push_back(drbg.bytes(config.file_bytes));

    // Untimed warmup so lazy OpenSSL initialization lands on neither side
    // of the comparison.
    const std::vector<Bytes> warmup = {drbg.bytes(ENVELOPE_CHUNK_SIZE)};
    run_mode(EngineMode::Reactive, warmup, vk, device, 0);
    run_mode(EngineMode::Proactive, warmup, vk, device, 0);

    result.reactive = run_mode(EngineMode::Reactive, corpus, vk, device, config.transition_cost_us);
    result.proactive = run_mode(EngineMode::Proactive, corpus, vk, device, config.transition_cost_us);

    uint64_t extra_crossings = result.proactive.crossings - result.reactive.crossings;
    result.modeled_extra_seconds = double(extra_crossings) * double(config.transition_cost_us) * 1e-6;
    result.measured_extra_seconds = result.proactive.encrypt_seconds - result.reactive.encrypt_seconds;
    if (result.modeled_extra_seconds > 0)
        result.model_ratio = result.measured_extra_seconds / result.modeled_extra_seconds;
    if (result.reactive.encrypt_seconds > 0)
        result.encrypt_overhead = (result.proactive.encrypt_seconds - result.reactive.encrypt_seconds) /
                                  result.reactive.encrypt_seconds;
    if (result.reactive.decrypt_seconds > 0)
        result.decrypt_overhead = (result.proactive.decrypt_seconds - result.reactive.decrypt_seconds) /
                                  result.reactive.decrypt_seconds;
    return result;
}

} // namespace escrowsim
