// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/crypto/wrap.hpp>
#include <escrowsim/enclave/boundary.hpp>
#include <escrowsim/support/errors.hpp>

#include <chrono>

namespace escrowsim {

namespace {

// Busy-wait, not sleep: OS timer slack would swamp microsecond costs and
// ruin the crossing-cost model the bench reports are checked against.
void spin_for_us(uint32_t us)
{
    if (us == 0) return;
    auto until = std::chrono::steady_clock::now() + std::chrono::microseconds(us);
    while (std::chrono::steady_clock::now() < until) {
    }
}

} // namespace

EnclaveBoundary::EnclaveBoundary(DeviceSecret device, ExposureLedger* ledger,
                                 uint32_t transition_cost_us)
    : m_device(std::move(device)), m_ledger(ledger)
{
    if (!ledger) throw ValidationError("enclave boundary requires an exposure ledger");
    m_stats.transition_cost_us = transition_cost_us;
}

Bytes EnclaveBoundary::call(EnclaveOp op, ByteSpan payload)
{
    ++m_stats.enter_count;
    spin_for_us(m_stats.transition_cost_us);
    struct ExitGuard {
        BoundaryStats& stats;
        ~ExitGuard()
        {
            spin_for_us(stats.transition_cost_us);
            ++stats.exit_count;
        }
    } guard{m_stats};
    return dispatch(op, payload);
}

Bytes EnclaveBoundary::dispatch(EnclaveOp op, ByteSpan payload)
{
    switch (op) {
    case EnclaveOp::Ping:
        return Bytes(payload.begin(), payload.end());

    case EnclaveOp::GenKeys: {
        ByteReader r(payload);
        Hash160 wallet = r.arr<20>("wallet address");
        r.expect_done("GenKeys payload");
        X25519KeyPair vk = X25519KeyPair::generate();
        ByteWriter w;
        w.raw(ByteSpan{vk.pub});
        w.raw(seal(m_device, VK_SEAL_LABEL, vk.priv).serialize());
        w.raw(seal(m_device, WALLET_SEAL_LABEL, wallet).serialize());
        return w.take();
    }

    case EnclaveOp::GenNonce: {
        if (!payload.empty()) throw ValidationError("GenNonce takes no payload");
        m_nonce = random_hash256();
        return Bytes(m_nonce.begin(), m_nonce.end());
    }

    case EnclaveOp::EkNew: {
        ByteReader r(payload);
        auto vk_pub = r.arr<32>("victim public key");
        r.expect_done("EkNew payload");
        Bytes ek = random_bytes(AEAD_KEY_SIZE);
        Bytes wrapped = wrap_secret(vk_pub, ek);
        // The whole point of reactive mode's weakness: the key is now
        // outside, so the forensics ledger gets it.
        m_ledger->append("reactive-ek", ek);
        ByteWriter w;
        w.raw(ByteSpan{ek});
        w.raw(wrapped);
        return w.take();
    }

    case EnclaveOp::FileBegin: {
        ByteReader r(payload);
        auto vk_pub = r.arr<32>("victim public key");
        ByteSpan nonce_base = r.raw(AEAD_NONCE_SIZE, "chunk nonce base");
        r.expect_done("FileBegin payload");
        Session session;
        Bytes ek = random_bytes(AEAD_KEY_SIZE);
        session.wrapped_ek = wrap_secret(vk_pub, ek);
        session.ek = SecureBytes(std::move(ek));
        session.nonce_base.assign(nonce_base.begin(), nonce_base.end());
        uint32_t handle = m_next_handle++;
        m_sessions.emplace(handle, std::move(session));
        ByteWriter w;
        w.u32(handle);
        return w.take();
    }

    case EnclaveOp::FileChunk: {
        ByteReader r(payload);
        uint32_t handle = r.u32("session handle");
        uint32_t aad_len = r.u32("chunk aad length");
        ByteSpan aad = r.raw(aad_len, "chunk aad");
        ByteSpan plaintext = r.raw(r.remaining(), "chunk plaintext");
        auto it = m_sessions.find(handle);
        if (it == m_sessions.end()) throw ValidationError("unknown enclave file session");
        Session& session = it->second;
        Bytes nonce = derive_chunk_nonce(session.nonce_base, session.counter++);
        return aead_seal(session.ek, nonce, aad, plaintext);
    }

    case EnclaveOp::FileEnd: {
        ByteReader r(payload);
        uint32_t handle = r.u32("session handle");
        r.expect_done("FileEnd payload");
        auto it = m_sessions.find(handle);
        if (it == m_sessions.end()) throw ValidationError("unknown enclave file session");
        Bytes wrapped = std::move(it->second.wrapped_ek);
        m_sessions.erase(it); // wipes the EK
        return wrapped;
    }

    case EnclaveOp::UnsealRelease: {
        SealedBlob blob = SealedBlob::deserialize(payload);
        SecureBytes plaintext = unseal(m_device, blob);
        // Release is the one sanctioned exit for the victim private key.
        m_ledger->append("released-" + blob.label, plaintext);
        return Bytes(plaintext.data(), plaintext.data() + plaintext.size());
    }
    }
    throw ValidationError("unknown enclave operation tag " + std::to_string(uint8_t(op)));
}

Bytes EnclaveBoundary::ping(ByteSpan payload)
{
    return call(EnclaveOp::Ping, payload);
}

GenKeysResult EnclaveBoundary::gen_victim_keypair(const Hash160& wallet_address)
{
    Bytes reply = call(EnclaveOp::GenKeys, wallet_address);
    ByteReader r(ByteSpan{reply});
    GenKeysResult result;
    auto pub = r.arr<32>("victim public key");
    result.vk_pub.assign(pub.begin(), pub.end());
    result.sealed_vk = SealedBlob::deserialize(r);
    result.sealed_wallet = SealedBlob::deserialize(r);
    r.expect_done("GenKeys reply");
    return result;
}

Hash256 EnclaveBoundary::gen_nonce()
{
    Bytes reply = call(EnclaveOp::GenNonce, {});
    ByteReader r(ByteSpan{reply});
    Hash256 nonce = r.arr<32>("nonce");
    r.expect_done("GenNonce reply");
    return nonce;
}

ReactiveKey EnclaveBoundary::reactive_new_key(ByteSpan vk_pub)
{
    Bytes reply = call(EnclaveOp::EkNew, vk_pub);
    ByteReader r(ByteSpan{reply});
    ReactiveKey key;
    ByteSpan ek = r.raw(AEAD_KEY_SIZE, "reactive key");
    key.ek = SecureBytes(Bytes(ek.begin(), ek.end()));
    ByteSpan wrapped = r.raw(r.remaining(), "wrapped key");
    key.wrapped_ek.assign(wrapped.begin(), wrapped.end());
    return key;
}

uint32_t EnclaveBoundary::file_begin(ByteSpan vk_pub, ByteSpan nonce_base12)
{
    ByteWriter payload;
    payload.raw(vk_pub);
    payload.raw(nonce_base12);
    Bytes reply = call(EnclaveOp::FileBegin, payload.data());
    ByteReader r(ByteSpan{reply});
    uint32_t handle = r.u32("session handle");
    r.expect_done("FileBegin reply");
    return handle;
}

Bytes EnclaveBoundary::file_chunk(uint32_t handle, ByteSpan aad, ByteSpan plaintext)
{
    ByteWriter w;
    w.u32(handle);
    w.u32(uint32_t(aad.size()));
    w.raw(aad);
    w.raw(plaintext);
    return call(EnclaveOp::FileChunk, w.data());
}

Bytes EnclaveBoundary::file_end(uint32_t handle)
{
    ByteWriter w;
    w.u32(handle);
    return call(EnclaveOp::FileEnd, w.data());
}

SecureBytes EnclaveBoundary::unseal_for_release(const SealedBlob& blob)
{
    return SecureBytes(call(EnclaveOp::UnsealRelease, blob.serialize()));
}

} // namespace escrowsim
