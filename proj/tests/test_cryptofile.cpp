// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/cryptofile/bench.hpp>
#include <escrowsim/cryptofile/capture.hpp>
#include <escrowsim/cryptofile/engine.hpp>
#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/enclave/escrow.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace escrowsim;
namespace fs = std::filesystem;

namespace {

struct TestEnclave {
    ExposureLedger ledger;
    EnclaveBoundary boundary;

    explicit TestEnclave(uint8_t fill = 0x42, uint32_t cost_us = 0)
        : boundary(DeviceSecret::from_bytes(Bytes(DEVICE_SECRET_SIZE, fill)), &ledger, cost_us)
    {
    }
};

struct TempCorpus {
    fs::path root;

    explicit TempCorpus(bool with_sentinel = true)
    {
        root = fs::temp_directory_path() /
               ("escrowsim-test-" + std::to_string(HmacDrbg(std::random_device{}()).next_u64()));
        fs::create_directories(root);
        if (with_sentinel) write_file(root / CORPUS_SENTINEL, Bytes{});
    }
    ~TempCorpus()
    {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
};

Bytes test_bytes(size_t n, uint64_t seed)
{
    return HmacDrbg(seed, "cryptofile-test").bytes(n);
}

} // namespace

TEST_CASE("envelope layout is stable")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    // magic(14) version(1) wrapped_len(2) wrapped(92) nonce(12), then one
    // final chunk record flag(1) len(4) body(n+16).
    Bytes empty_env = envelope_encrypt({}, vk.pub, EngineMode::Reactive, e.boundary);
    CHECK(empty_env.size() == 142);
    CHECK(std::string(empty_env.begin(), empty_env.begin() + 13) == "ESCROWSIM-ENV");
    CHECK(empty_env[13] == 0);
    CHECK(empty_env[14] == ENVELOPE_VERSION);
    CHECK(empty_env[15] == 92); // eph pub 32 + nonce 12 + key 32 + tag 16
    CHECK(empty_env[16] == 0);
    CHECK(empty_env[121] == 0);                      // final chunk
    CHECK(empty_env[122] == AEAD_TAG_SIZE);          // empty body, tag only
    CHECK(envelope_decrypt(empty_env, vk.priv.span()).empty());

    Bytes one = envelope_encrypt(test_bytes(1000, 7), vk.pub, EngineMode::Proactive, e.boundary);
    CHECK(one.size() == 142 + 1000);

    // Two chunks: a full one flagged "more" and a short final one.
    size_t big = ENVELOPE_CHUNK_SIZE + 5;
    Bytes two = envelope_encrypt(test_bytes(big, 8), vk.pub, EngineMode::Reactive, e.boundary);
    CHECK(two.size() == 121 + (5 + ENVELOPE_CHUNK_SIZE + 16) + (5 + 5 + 16));
    CHECK(two[121] == 1);
    CHECK(envelope_decrypt(two, vk.priv.span()) == test_bytes(big, 8));
}

TEST_CASE("envelope round trip across sizes and modes")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    const size_t sizes[] = {0,     1,       17,        4096,    ENVELOPE_CHUNK_SIZE - 1,
                            ENVELOPE_CHUNK_SIZE, ENVELOPE_CHUNK_SIZE + 1, 200000, 1 << 20, 4 << 20};
    uint64_t seed = 100;
    for (size_t n : sizes) {
        for (EngineMode mode : {EngineMode::Reactive, EngineMode::Proactive}) {
            Bytes contents = test_bytes(n, seed++);
            Bytes env = envelope_encrypt(contents, vk.pub, mode, e.boundary);
            CHECK(envelope_decrypt(env, vk.priv.span()) == contents);
        }
    }
}

TEST_CASE("every envelope carries a fresh file key")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    std::set<std::string> keys;
    for (int i = 0; i < 20; ++i) {
        EngineMode mode = i % 2 == 0 ? EngineMode::Reactive : EngineMode::Proactive;
        Bytes env = envelope_encrypt(test_bytes(64, 200 + i), vk.pub, mode, e.boundary);
        SecureBytes ek = unwrap_envelope_key(env, vk.priv.span());
        CHECK(ek.size() == 32);
        keys.insert(to_hex(ek.span()));
    }
    CHECK(keys.size() == 20);
}

TEST_CASE("tampered envelopes fail closed")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();
    Bytes contents = test_bytes(1000, 300);
    Bytes env = envelope_encrypt(contents, vk.pub, EngineMode::Proactive, e.boundary);

    auto flip = [&](size_t off) {
        Bytes bad = env;
        bad[off] ^= 0x01;
        return bad;
    };

    CHECK_THROWS_AS(envelope_decrypt(flip(17), vk.priv.span()), AuthenticationError);  // wrapped key
    CHECK_THROWS_AS(envelope_decrypt(flip(109), vk.priv.span()), AuthenticationError); // data nonce
    CHECK_THROWS_AS(envelope_decrypt(flip(121), vk.priv.span()), AuthenticationError); // chunk flag
    CHECK_THROWS_AS(envelope_decrypt(flip(126), vk.priv.span()), AuthenticationError); // ciphertext
    CHECK_THROWS_AS(envelope_decrypt(flip(env.size() - 1), vk.priv.span()), AuthenticationError);

    Bytes bad_flag = env;
    bad_flag[121] = 2;
    CHECK_THROWS_AS(envelope_decrypt(bad_flag, vk.priv.span()), ParseError);

    Bytes bad_magic = env;
    bad_magic[0] ^= 0x01;
    CHECK_THROWS_AS(envelope_decrypt(bad_magic, vk.priv.span()), ParseError);

    Bytes bad_version = env;
    bad_version[14] = 9;
    CHECK_THROWS_WITH_AS(envelope_decrypt(bad_version, vk.priv.span()),
                         "unsupported envelope version 9", ParseError);
}

TEST_CASE("truncated envelopes name the missing region")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();
    Bytes env = envelope_encrypt(test_bytes(ENVELOPE_CHUNK_SIZE + 100, 301), vk.pub,
                                 EngineMode::Reactive, e.boundary);

    auto cut = [&](size_t n) { return Bytes(env.begin(), env.begin() + n); };

    CHECK_THROWS_WITH_AS(envelope_decrypt(cut(5), vk.priv.span()),
                         "truncated input: missing envelope magic", ParseError);
    CHECK_THROWS_WITH_AS(envelope_decrypt(cut(100), vk.priv.span()),
                         "truncated input: missing wrapped key", ParseError);
    CHECK_THROWS_WITH_AS(envelope_decrypt(cut(115), vk.priv.span()),
                         "truncated input: missing envelope data nonce", ParseError);
    CHECK_THROWS_WITH_AS(envelope_decrypt(cut(130), vk.priv.span()),
                         "truncated input: missing chunk ciphertext", ParseError);

    // Cutting at a record boundary after a "more" chunk looks like a missing
    // next record, not a short file.
    size_t first_record_end = 121 + 1 + 4 + ENVELOPE_CHUNK_SIZE + AEAD_TAG_SIZE;
    CHECK_THROWS_WITH_AS(envelope_decrypt(cut(first_record_end), vk.priv.span()),
                         "truncated input: missing chunk flag", ParseError);

    // Rewriting the first chunk as final does not fool the tag: the flag is
    // authenticated, so dropping the tail fails closed instead of returning
    // a shortened file.
    Bytes spliced = cut(first_record_end);
    spliced[121] = 0;
    CHECK_THROWS_AS(envelope_decrypt(spliced, vk.priv.span()), AuthenticationError);

    Bytes trailing = env;
    trailing.push_back(0x00);
    CHECK_THROWS_WITH_AS(envelope_decrypt(trailing, vk.priv.span()),
                         "trailing bytes after envelope", ParseError);
}

TEST_CASE("corpus listing requires the sentinel and skips artifacts")
{
    TempCorpus bare(false);
    CHECK_THROWS_AS(list_corpus_files(bare.root), ValidationError);
    CHECK_THROWS_AS(list_corpus_envelopes(bare.root), ValidationError);
    CHECK_THROWS_AS(require_corpus_sentinel(bare.root / "missing"), ValidationError);

    TempCorpus c;
    fs::create_directories(c.root / "sub");
    write_file(c.root / "b.txt", test_bytes(10, 1));
    write_file(c.root / "a.txt", test_bytes(10, 2));
    write_file(c.root / "sub" / "c.txt", test_bytes(10, 3));
    write_file(c.root / "d.esc", test_bytes(10, 4));
    write_file(c.root / ".escrowsim-state", test_bytes(10, 5));

    std::vector<fs::path> files = list_corpus_files(c.root);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "a.txt");
    CHECK(files[1].filename() == "b.txt");
    CHECK(files[2].filename() == "c.txt");

    std::vector<fs::path> envs = list_corpus_envelopes(c.root);
    REQUIRE(envs.size() == 1);
    CHECK(envs[0].filename() == "d.esc");
}

TEST_CASE("single-file encryption refuses paths outside a marked root")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    TempCorpus bare(false);
    write_file(bare.root / "loose.txt", test_bytes(32, 10));
    CHECK_THROWS_AS(encrypt_file(bare.root / "loose.txt", vk.pub, EngineMode::Reactive,
                                 e.boundary, false),
                    ValidationError);

    TempCorpus c;
    fs::create_directories(c.root / "deep" / "deeper");
    fs::path target = c.root / "deep" / "deeper" / "doc.txt";
    write_file(target, test_bytes(32, 11));
    encrypt_file(target, vk.pub, EngineMode::Reactive, e.boundary, false);
    CHECK(fs::exists(target));
    CHECK(fs::exists(c.root / "deep" / "deeper" / "doc.txt.esc"));

    CHECK_THROWS_AS(decrypt_file(target, vk.priv.span(), false), ValidationError);
}

TEST_CASE("corpus encrypt and decrypt round trip")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    TempCorpus c;
    fs::create_directories(c.root / "nested");
    std::vector<std::pair<fs::path, Bytes>> originals;
    size_t sizes[] = {0, 1, 4096, ENVELOPE_CHUNK_SIZE + 9, 300000};
    for (size_t i = 0; i < std::size(sizes); ++i) {
        fs::path p = i % 2 == 0 ? c.root / ("f" + std::to_string(i) + ".bin")
                                : c.root / "nested" / ("f" + std::to_string(i) + ".bin");
        Bytes data = test_bytes(sizes[i], 400 + i);
        write_file(p, data);
        originals.emplace_back(p, std::move(data));
    }

    CorpusReport report = encrypt_corpus(c.root, vk.pub, EngineMode::Proactive, e.boundary, true);
    CHECK(report.completed);
    CHECK(report.mode == EngineMode::Proactive);
    CHECK(report.files == originals.size());
    CHECK(report.bytes == 0 + 1 + 4096 + ENVELOPE_CHUNK_SIZE + 9 + 300000);
    CHECK(report.file_reports.size() == originals.size());
    CHECK(report.boundary.enter_count == report.boundary.exit_count);

    for (const auto& [p, data] : originals) {
        CHECK(!fs::exists(p)); // replaced
        CHECK(fs::exists(p.string() + ENVELOPE_SUFFIX));
    }
    CHECK(list_corpus_files(c.root).empty());

    DecryptReport back = decrypt_corpus(c.root, vk.priv.span(), true);
    CHECK(back.completed);
    CHECK(back.files == originals.size());
    CHECK(list_corpus_envelopes(c.root).empty());
    for (const auto& [p, data] : originals)
        CHECK(read_file(p) == data);
}

TEST_CASE("corpus encryption stops on the first failure with a partial report")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    TempCorpus c;
    write_file(c.root / "a.bin", test_bytes(100, 500));
    write_file(c.root / "b.bin", test_bytes(100, 501));
    write_file(c.root / "c.bin", test_bytes(100, 502));
    // A directory squatting on b's envelope path makes the atomic rename fail.
    fs::create_directories(c.root / "b.bin.esc");

    CorpusReport report = encrypt_corpus(c.root, vk.pub, EngineMode::Reactive, e.boundary, false);
    CHECK(!report.completed);
    CHECK(report.error.find("b.bin") != std::string::npos);
    CHECK(report.files == 1);
    CHECK(fs::exists(c.root / "a.bin.esc"));
    CHECK(!fs::exists(c.root / "c.bin.esc"));
}

TEST_CASE("an interrupted run leaves every finished envelope recoverable")
{
    TestEnclave e;
    X25519KeyPair vk = X25519KeyPair::generate();

    TempCorpus c;
    std::vector<Bytes> data;
    for (int i = 0; i < 5; ++i) {
        data.push_back(test_bytes(20000 + 7 * i, 600 + i));
        write_file(c.root / ("f" + std::to_string(i) + ".bin"), data.back());
    }

    // "Crash" after three files.
    std::vector<fs::path> files = list_corpus_files(c.root);
    for (int i = 0; i < 3; ++i)
        encrypt_file(files[i], vk.pub, EngineMode::Proactive, e.boundary, true);

    for (int i = 0; i < 3; ++i) {
        fs::path env = files[i].string() + ENVELOPE_SUFFIX;
        CHECK(envelope_decrypt(read_file(env), vk.priv.span()) == data[i]);
    }
    for (int i = 3; i < 5; ++i)
        CHECK(read_file(files[i]) == data[i]);
}

TEST_CASE("bench crossing model")
{
    CHECK(modeled_crossings(EngineMode::Reactive, 0) == 2);
    CHECK(modeled_crossings(EngineMode::Reactive, 10 << 20) == 2);
    CHECK(modeled_crossings(EngineMode::Proactive, 0) == 6);
    CHECK(modeled_crossings(EngineMode::Proactive, ENVELOPE_CHUNK_SIZE) == 6);
    CHECK(modeled_crossings(EngineMode::Proactive, ENVELOPE_CHUNK_SIZE + 1) == 8);

    BenchConfig cfg;
    cfg.files = 4;
    cfg.file_bytes = 160 * 1024; // 3 chunks
    cfg.transition_cost_us = 300;
    cfg.seed = 42;

    BenchResult r = run_bench(cfg);
    CHECK(r.reactive.files == 4);
    CHECK(r.reactive.bytes == 4 * cfg.file_bytes);
    CHECK(r.reactive.crossings == 4 * 2);
    CHECK(r.proactive.crossings == 4 * 2 * (3 + 2));
    CHECK(r.modeled_extra_seconds == doctest::Approx(32 * 300e-6));

    // The simulated transition cost dominates, so the measurement should sit
    // near the model.
    CHECK(r.model_ratio > 0.8);
    CHECK(r.model_ratio < 1.2);
    CHECK(r.encrypt_overhead > 0);

    BenchConfig free_cfg = cfg;
    free_cfg.transition_cost_us = 0;
    BenchResult f = run_bench(free_cfg);
    CHECK(f.modeled_extra_seconds == 0);
    CHECK(f.model_ratio == 0);
    CHECK(f.proactive.crossings == r.proactive.crossings);
}

TEST_CASE("capture experiment separates the engines")
{
    Hash160 wallet{};

    auto run_mode = [&](EngineMode mode, bool release_after) {
        TestEnclave e;
        GenKeysResult keys = e.boundary.gen_victim_keypair(wallet);

        std::vector<Bytes> envelopes;
        for (int i = 0; i < 10; ++i)
            envelopes.push_back(
                envelope_encrypt(test_bytes(5000, 700 + i), keys.vk_pub, mode, e.boundary));

        // The operator escrow recovers VK_prv without touching the ledger.
        EscrowFile escrow;
        escrow.device_secret = Bytes(DEVICE_SECRET_SIZE, 0x42);
        escrow.vk_pub = keys.vk_pub;
        escrow.sealed_vk = keys.sealed_vk;
        escrow.sealed_wallet = keys.sealed_wallet;
        SecureBytes vk_prv = escrow.recover_vk_priv();

        CaptureResult before = capture_experiment(envelopes, vk_prv.span(), e.ledger);
        CHECK(before.envelopes == 10);
        CHECK(!before.vk_prv_exposed);
        if (mode == EngineMode::Reactive)
            CHECK(before.exposed_keys == 10);
        else
            CHECK(before.exposed_keys == 0);

        if (release_after) {
            e.boundary.unseal_for_release(keys.sealed_vk);
            CaptureResult after = capture_experiment(envelopes, vk_prv.span(), e.ledger);
            CHECK(after.vk_prv_exposed);
        }
    };

    run_mode(EngineMode::Reactive, false);
    run_mode(EngineMode::Proactive, true);
}

TEST_CASE("capture experiment reads envelopes from a corpus root")
{
    TestEnclave e;
    GenKeysResult keys = e.boundary.gen_victim_keypair(Hash160{});

    TempCorpus c;
    for (int i = 0; i < 4; ++i)
        write_file(c.root / ("f" + std::to_string(i) + ".bin"), test_bytes(3000, 800 + i));
    CorpusReport report = encrypt_corpus(c.root, keys.vk_pub, EngineMode::Reactive, e.boundary, true);
    REQUIRE(report.completed);

    EscrowFile escrow;
    escrow.device_secret = Bytes(DEVICE_SECRET_SIZE, 0x42);
    escrow.vk_pub = keys.vk_pub;
    escrow.sealed_vk = keys.sealed_vk;
    escrow.sealed_wallet = keys.sealed_wallet;
    SecureBytes vk_prv = escrow.recover_vk_priv();

    CaptureResult result = capture_experiment(c.root, vk_prv.span(), e.ledger);
    CHECK(result.envelopes == 4);
    CHECK(result.exposed_keys == 4);
    CHECK(!result.vk_prv_exposed);
}
