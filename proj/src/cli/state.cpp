// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/state.hpp>

#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <cstring>

namespace escrowsim {

namespace {

void put_sized(ByteWriter& w, const Bytes& data)
{
    w.u32(uint32_t(data.size()));
    w.raw(data);
}

Bytes get_sized(ByteReader& r, const char* what)
{
    const uint32_t n = r.u32(what);
    ByteSpan s = r.raw(n, what);
    return Bytes(s.begin(), s.end());
}

} // namespace

ReleaseMetadata SimState::metadata() const
{
    ReleaseMetadata md;
    md.ak_fp = fingerprint20(ak_pub_der);
    md.vk_fp = fingerprint20(vk_pub);
    md.nonce = nonce;
    return md;
}

Bytes SimState::serialize() const
{
    ByteWriter w;
    w.raw(ByteSpan(reinterpret_cast<const uint8_t*>(STATE_MAGIC), sizeof(STATE_MAGIC)));
    w.u32(STATE_VERSION);
    w.u64(seed);
    w.u32(bits);
    w.u8(uint8_t(mode));
    put_sized(w, device_secret);
    put_sized(w, vk_pub);
    put_sized(w, Bytes(sealed_vk.serialize()));
    put_sized(w, Bytes(sealed_wallet.serialize()));
    w.raw(nonce);
    put_sized(w, ak_pub_der);
    put_sized(w, ak_prv_der);
    w.raw(wallet);
    w.raw(payment_txid);
    w.u64(amount);
    put_sized(w, signature);
    put_sized(w, vk_prv);
    return w.take();
}

SimState SimState::deserialize(ByteSpan data)
{
    ByteReader r(data);
    r.expect_magic(ByteSpan(reinterpret_cast<const uint8_t*>(STATE_MAGIC), sizeof(STATE_MAGIC)),
                   "state file");
    const uint32_t version = r.u32("state version");
    if (version != STATE_VERSION)
        throw ParseError("unsupported state version " + std::to_string(version));

    SimState st;
    st.seed = r.u64("seed");
    st.bits = r.u32("bits");
    st.mode = EngineMode(r.u8("mode"));
    if (st.mode != EngineMode::Reactive && st.mode != EngineMode::Proactive)
        throw ParseError("bad engine mode in state file");
    st.device_secret = get_sized(r, "device secret");
    st.vk_pub = get_sized(r, "victim public key");
    st.sealed_vk = SealedBlob::deserialize(get_sized(r, "sealed victim key"));
    st.sealed_wallet = SealedBlob::deserialize(get_sized(r, "sealed wallet"));
    st.nonce = r.arr<32>("nonce");
    st.ak_pub_der = get_sized(r, "attacker public key");
    st.ak_prv_der = get_sized(r, "attacker private key");
    st.wallet = r.arr<20>("wallet");
    st.payment_txid = r.arr<32>("payment txid");
    st.amount = r.u64("amount");
    st.signature = get_sized(r, "signature");
    st.vk_prv = get_sized(r, "released victim key");
    r.expect_done("state file");
    return st;
}

void SimState::save(const std::filesystem::path& path) const
{
    write_file_atomic(path, serialize());
}

SimState SimState::load(const std::filesystem::path& path)
{
    return deserialize(read_file(path));
}

} // namespace escrowsim
