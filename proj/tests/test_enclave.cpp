// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/crypto/wrap.hpp>
#include <escrowsim/enclave/boundary.hpp>
#include <escrowsim/enclave/escrow.hpp>
#include <escrowsim/enclave/exposure_ledger.hpp>
#include <escrowsim/enclave/sealing.hpp>
#include <escrowsim/support/errors.hpp>

#include <doctest.h>

#include <chrono>
#include <filesystem>

using namespace escrowsim;

namespace {

DeviceSecret fixed_device()
{
    return DeviceSecret::from_bytes(Bytes(32, 0x11));
}

DeviceSecret other_device()
{
    return DeviceSecret::from_bytes(Bytes(32, 0x22));
}

} // namespace

TEST_CASE("seal key derivation matches the frozen oracle")
{
    DeviceSecret device = fixed_device();
    // Values from an independent scripted HKDF run, frozen before the build.
    CHECK(to_hex(derive_seal_key(device, "seal-v1")) ==
          "88260cbd8cb464f23396aaee6e20ca3a124313a01f6255c0c4969cdb89775cb6");
    CHECK(to_hex(derive_seal_key(device, "seal-v2")) ==
          "95d20537a62547eb7be380d616157af252d7e07c5a4b1b4f5667994c316964c0");
    // Pure function.
    CHECK(derive_seal_key(device, "seal-v1") == derive_seal_key(device, "seal-v1"));
    CHECK(derive_seal_key(device, "seal-v1") != derive_seal_key(other_device(), "seal-v1"));
}

TEST_CASE("seal round trips and binds to device and label")
{
    DeviceSecret device = fixed_device();
    Bytes pt = to_bytes("victim private key bytes");
    SealedBlob blob = seal(device, "victim-key-v1", pt);

    SecureBytes back = unseal(device, blob);
    CHECK(Bytes(back.data(), back.data() + back.size()) == pt);

    CHECK_THROWS_AS(unseal(other_device(), blob), AuthenticationError);

    SealedBlob wrong_label = blob;
    wrong_label.label = "victim-key-v2";
    CHECK_THROWS_AS(unseal(device, wrong_label), AuthenticationError);

    SealedBlob flipped = blob;
    flipped.body[0] ^= 0x01;
    CHECK_THROWS_AS(unseal(device, flipped), AuthenticationError);
}

TEST_CASE("sealing rejects every single-bit mutation of a 1 KiB blob")
{
    DeviceSecret device = fixed_device();
    HmacDrbg rng(31, "seal-prop");
    Bytes pt = rng.bytes(1024);
    SealedBlob blob = seal(device, "prop", pt);

    size_t cases = 0;
    for (size_t byte = 0; byte < blob.nonce.size(); ++byte) {
        for (int bit = 0; bit < 8; ++bit) {
            SealedBlob bad = blob;
            bad.nonce[byte] ^= uint8_t(1) << bit;
            CHECK_THROWS_AS(unseal(device, bad), AuthenticationError);
            ++cases;
        }
    }
    for (size_t byte = 0; byte < blob.body.size(); ++byte) {
        for (int bit = 0; bit < 8; ++bit) {
            SealedBlob bad = blob;
            bad.body[byte] ^= uint8_t(1) << bit;
            CHECK_THROWS_AS(unseal(device, bad), AuthenticationError);
            ++cases;
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("sealed blob serialization round trips and validates")
{
    SealedBlob blob = seal(fixed_device(), "ser", to_bytes("x"));
    Bytes wire = blob.serialize();
    CHECK(SealedBlob::deserialize(wire) == blob);

    Bytes truncated(wire.begin(), wire.end() - 1);
    CHECK_THROWS_AS(SealedBlob::deserialize(truncated), ParseError);
}

TEST_CASE("victim keypairs are distinct 256-bit curve keys and wrap EKs")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger);
    Hash160 wallet{};
    wallet.fill(0xAB);

    GenKeysResult first = boundary.gen_victim_keypair(wallet);
    GenKeysResult second = boundary.gen_victim_keypair(wallet);
    CHECK(first.vk_pub.size() == 32);
    CHECK(first.vk_pub != second.vk_pub);

    // Wrap-then-unwrap identity under the generated pair.
    SecureBytes vk_prv = unseal(fixed_device(), first.sealed_vk);
    Bytes ek = HmacDrbg(1, "ek").bytes(32);
    Bytes wrapped = wrap_secret(first.vk_pub, ek);
    SecureBytes unwrapped = unwrap_secret(vk_prv, wrapped);
    CHECK(Bytes(unwrapped.data(), unwrapped.data() + unwrapped.size()) == ek);

    // The sealed wallet address recovers too.
    SecureBytes wallet_back = unseal(fixed_device(), first.sealed_wallet);
    CHECK(Bytes(wallet_back.data(), wallet_back.data() + wallet_back.size()) ==
          Bytes(wallet.begin(), wallet.end()));

    // Key generation must not leak the private key into the ledger.
    CHECK_FALSE(ledger.contains(vk_prv));
    CHECK(ledger.size() == 0);
}

TEST_CASE("nonces are 32 bytes and distinct across boundaries")
{
    ExposureLedger ledger;
    EnclaveBoundary a(fixed_device(), &ledger);
    EnclaveBoundary b(fixed_device(), &ledger);
    Hash256 na = a.gen_nonce();
    Hash256 nb = b.gen_nonce();
    CHECK(na != nb);
    CHECK(na.size() == 32);
}

TEST_CASE("boundary counters track calls exactly")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger);
    CHECK(boundary.stats().enter_count == 0);
    for (int i = 0; i < 100; ++i) {
        Bytes echo = boundary.ping(to_bytes("hi"));
        CHECK(echo == to_bytes("hi"));
    }
    CHECK(boundary.stats().enter_count == 100);
    CHECK(boundary.stats().exit_count == 100);

    // Errors still exit through the boundary.
    CHECK_THROWS_AS(boundary.call(EnclaveOp(0x7F), {}), ValidationError);
    CHECK(boundary.stats().enter_count == 101);
    CHECK(boundary.stats().exit_count == 101);
}

TEST_CASE("transition cost is honored per crossing")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger, 200);
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 10; ++i) boundary.ping({});
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    // 10 calls x 2 crossings x 200us = 4000us floor.
    CHECK(elapsed >= 4000);
}

TEST_CASE("reactive key exits the boundary and lands in the ledger")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger);
    Hash160 wallet{};
    GenKeysResult keys = boundary.gen_victim_keypair(wallet);

    ReactiveKey key = boundary.reactive_new_key(keys.vk_pub);
    CHECK(key.ek.size() == 32);
    CHECK(ledger.contains(key.ek));
    CHECK(ledger.entries().at(0).tag == "reactive-ek");

    // The wrapped copy opens back to the same key under VK_prv.
    SecureBytes vk_prv = unseal(fixed_device(), keys.sealed_vk);
    SecureBytes unwrapped = unwrap_secret(vk_prv, key.wrapped_ek);
    CHECK(to_hex(unwrapped.span()) == to_hex(key.ek.span()));
}

TEST_CASE("proactive sessions keep the key inside")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger);
    Hash160 wallet{};
    GenKeysResult keys = boundary.gen_victim_keypair(wallet);

    uint64_t before = boundary.stats().enter_count;
    Bytes nonce_base = HmacDrbg(9, "nonce-base").bytes(AEAD_NONCE_SIZE);
    uint32_t handle = boundary.file_begin(keys.vk_pub, nonce_base);

    HmacDrbg rng(5, "chunks");
    std::vector<Bytes> plains, cts;
    for (int i = 0; i < 100; ++i) {
        plains.push_back(rng.bytes(256));
        cts.push_back(boundary.file_chunk(handle, to_bytes("aad"), plains.back()));
        CHECK(cts.back().size() == 256 + AEAD_TAG_SIZE);
    }
    Bytes wrapped_ek = boundary.file_end(handle);
    uint64_t calls = boundary.stats().enter_count - before;
    CHECK(calls == 102); // begin + 100 chunks + end: >=100 crossings

    // Nothing reactive-like in the ledger.
    CHECK(ledger.size() == 0);

    // Ciphertexts decrypt under the unwrapped key with per-chunk nonces.
    SecureBytes vk_prv = unseal(fixed_device(), keys.sealed_vk);
    SecureBytes ek = unwrap_secret(vk_prv, wrapped_ek);
    CHECK_FALSE(ledger.contains(ek));
    for (size_t i = 0; i < cts.size(); ++i) {
        Bytes pt = aead_open(ek, derive_chunk_nonce(nonce_base, i), to_bytes("aad"), cts[i]);
        CHECK(pt == plains[i]);
    }

    // The session is gone.
    CHECK_THROWS_AS(boundary.file_chunk(handle, {}, to_bytes("x")), ValidationError);
    CHECK_THROWS_AS(boundary.file_end(handle), ValidationError);
}

TEST_CASE("release is the only path that exposes the victim key")
{
    ExposureLedger ledger;
    EnclaveBoundary boundary(fixed_device(), &ledger);
    Hash160 wallet{};
    GenKeysResult keys = boundary.gen_victim_keypair(wallet);
    SecureBytes expected = unseal(fixed_device(), keys.sealed_vk);

    CHECK_FALSE(ledger.contains(expected));
    SecureBytes released = boundary.unseal_for_release(keys.sealed_vk);
    CHECK(to_hex(released.span()) == to_hex(expected.span()));
    CHECK(ledger.contains(expected));
    bool found = false;
    for (const auto& e : ledger.entries())
        if (e.tag == "released-victim-key-v1") found = true;
    CHECK(found);
}

TEST_CASE("exposure ledger is ordered, searchable, and persistent")
{
    ExposureLedger ledger;
    ledger.append("a", to_bytes("secret-one"));
    ledger.append("b", to_bytes("secret-two"));
    CHECK(ledger.size() == 2);
    CHECK(ledger.entries()[0].timestamp == 0);
    CHECK(ledger.entries()[1].timestamp == 1);
    CHECK(ledger.contains(to_bytes("cret-tw")));
    CHECK_FALSE(ledger.contains(to_bytes("secret-three")));

    Bytes wire = ledger.serialize();
    ExposureLedger back = ExposureLedger::deserialize(wire);
    CHECK(back.entries() == ledger.entries());

    Bytes corrupt = wire;
    corrupt[0] ^= 1;
    CHECK_THROWS_AS(ExposureLedger::deserialize(corrupt), ParseError);

    auto tmp = std::filesystem::temp_directory_path() / "escrowsim-ledger-test.bin";
    std::filesystem::remove(tmp);
    CHECK(ExposureLedger::load_or_empty(tmp).size() == 0);
    ledger.save(tmp);
    CHECK(ExposureLedger::load_or_empty(tmp).size() == 2);
    std::filesystem::remove(tmp);
}

TEST_CASE("escrow file recovers the victim key without release")
{
    ExposureLedger ledger;
    DeviceSecret device = fixed_device();
    EnclaveBoundary boundary(device.clone(), &ledger);
    Hash160 wallet{};
    wallet.fill(0x77);
    GenKeysResult keys = boundary.gen_victim_keypair(wallet);

    EscrowFile escrow;
    escrow.device_secret.assign(device.bytes().begin(), device.bytes().end());
    escrow.vk_pub = keys.vk_pub;
    escrow.sealed_vk = keys.sealed_vk;
    escrow.sealed_wallet = keys.sealed_wallet;

    auto tmp = std::filesystem::temp_directory_path() / "escrowsim-escrow-test.bin";
    escrow.save(tmp);
    EscrowFile loaded = EscrowFile::load(tmp);
    std::filesystem::remove(tmp);

    CHECK(loaded.vk_pub == keys.vk_pub);
    SecureBytes direct = unseal(device, keys.sealed_vk);
    SecureBytes recovered = loaded.recover_vk_priv();
    CHECK(to_hex(recovered.span()) == to_hex(direct.span()));

    // Recovery never touched the ledger.
    CHECK(ledger.size() == 0);

    Bytes wire = escrow.serialize();
    wire[0] ^= 1;
    CHECK_THROWS_AS(EscrowFile::deserialize(wire), ParseError);
}
