// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/crypto/wrap.hpp>
#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

ByteSpan envelope_magic()
{
    return ByteSpan(reinterpret_cast<const uint8_t*>(ENVELOPE_MAGIC), sizeof(ENVELOPE_MAGIC));
}

Bytes chunk_aad(uint8_t flag, uint64_t index)
{
    ByteWriter w;
    w.u8(flag);
    w.u64(index);
    return w.take();
}

} // namespace

const char* engine_mode_name(EngineMode mode)
{
    return mode == EngineMode::Reactive ? "reactive" : "proactive";
}

EngineMode engine_mode_from_name(std::string_view name)
{
    if (name == "reactive") return EngineMode::Reactive;
    if (name == "proactive") return EngineMode::Proactive;
    throw ValidationError("unknown engine mode: " + std::string(name));
}

Bytes envelope_encrypt(ByteSpan contents, ByteSpan vk_pub, EngineMode mode,
                       EnclaveBoundary& boundary)
{
    Bytes data_nonce = random_bytes(AEAD_NONCE_SIZE);

    // Chunk boundaries: full 64 KiB pieces, final piece possibly short or
    // empty. An empty file is one empty final chunk.
    std::vector<ByteSpan> chunks;
    size_t off = 0;
    do {
        size_t n = std::min(ENVELOPE_CHUNK_SIZE, contents.size() - off);
        chunks.push_back(contents.subspan(off, n));
        off += n;
    } while (off < contents.size());

    Bytes wrapped;
    std::vector<Bytes> sealed;
    sealed.reserve(chunks.size());

    if (mode == EngineMode::Reactive) {
        ReactiveKey key = boundary.reactive_new_key(vk_pub);
        wrapped = key.wrapped_ek;
        for (size_t i = 0; i < chunks.size(); ++i) {
            uint8_t flag = i + 1 < chunks.size() ? 1 : 0;
            sealed.push_back(aead_seal(key.ek, derive_chunk_nonce(data_nonce, i),
                                       chunk_aad(flag, i), chunks[i]));
        }
        // key.ek wiped on scope exit
    } else {
        uint32_t handle = boundary.file_begin(vk_pub, data_nonce);
        for (size_t i = 0; i < chunks.size(); ++i) {
            uint8_t flag = i + 1 < chunks.size() ? 1 : 0;
            sealed.push_back(boundary.file_chunk(handle, chunk_aad(flag, i), chunks[i]));
        }
        wrapped = boundary.file_end(handle);
    }

    ByteWriter w;
    w.raw(envelope_magic());
    w.u8(ENVELOPE_VERSION);
    w.u16(uint16_t(wrapped.size()));
    w.raw(wrapped);
    w.raw(data_nonce);
    for (size_t i = 0; i < sealed.size(); ++i) {
        w.u8(i + 1 < sealed.size() ? 1 : 0);
        w.u32(uint32_t(sealed[i].size()));
        w.raw(sealed[i]);
    }
    return w.take();
}

namespace {

struct ParsedEnvelope {
    ByteSpan wrapped;
    ByteSpan data_nonce;
    ByteReader rest; // positioned at the first chunk record
};

ParsedEnvelope parse_header(ByteSpan envelope)
{
    ByteReader r(envelope);
    r.expect_magic(envelope_magic(), "envelope magic");
    uint8_t version = r.u8("envelope version");
    if (version != ENVELOPE_VERSION)
        throw ParseError("unsupported envelope version " + std::to_string(version));
    uint16_t wrapped_len = r.u16("wrapped key length");
    ByteSpan wrapped = r.raw(wrapped_len, "wrapped key");
    ByteSpan nonce = r.raw(AEAD_NONCE_SIZE, "envelope data nonce");
    return ParsedEnvelope{wrapped, nonce, r};
}

} // namespace

Bytes envelope_decrypt(ByteSpan envelope, ByteSpan vk_prv)
{
    ParsedEnvelope parsed = parse_header(envelope);
    SecureBytes ek = unwrap_secret(vk_prv, parsed.wrapped);

    Bytes out;
    ByteReader& r = parsed.rest;
    for (uint64_t index = 0;; ++index) {
        uint8_t flag = r.u8("chunk flag");
        if (flag > 1) throw ParseError("invalid chunk flag " + std::to_string(flag));
        uint32_t len = r.u32("chunk length");
        ByteSpan body = r.raw(len, "chunk ciphertext");
        Bytes pt = aead_open(ek, derive_chunk_nonce(parsed.data_nonce, index),
                             chunk_aad(flag, index), body);
        out.insert(out.end(), pt.begin(), pt.end());
        if (flag == 0) break;
    }
    r.expect_done("envelope");
    return out;
}

SecureBytes unwrap_envelope_key(ByteSpan envelope, ByteSpan vk_prv)
{
    return unwrap_secret(vk_prv, parse_header(envelope).wrapped);
}

} // namespace escrowsim
