// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

// The deterministic scope uses the legacy RAND_METHOD override, which is the
// only process-wide hook OpenSSL 3.0 offers for making EVP key generation
// reproducible without a custom provider.
#define OPENSSL_SUPPRESS_DEPRECATED

#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>

#include <openssl/rand.h>

#include <cstring>

namespace escrowsim {

HmacDrbg::HmacDrbg(uint64_t seed, std::string_view personalization)
{
    uint8_t le[8];
    for (int i = 0; i < 8; ++i) le[i] = uint8_t(seed >> (8 * i));
    Bytes material(le, le + 8);
    material.insert(material.end(), personalization.begin(), personalization.end());
    m_key = sha256(material);
}

HmacDrbg::HmacDrbg(ByteSpan seed, std::string_view personalization)
{
    Bytes material(seed.begin(), seed.end());
    material.insert(material.end(), personalization.begin(), personalization.end());
    m_key = sha256(material);
}

void HmacDrbg::fill(std::span<uint8_t> out)
{
    size_t off = 0;
    while (off < out.size()) {
        uint8_t msg[8];
        for (int i = 0; i < 8; ++i) msg[i] = uint8_t(m_counter >> (8 * i));
        ++m_counter;
        Hash256 block = hmac_sha256(ByteSpan(m_key.data(), m_key.size()), ByteSpan(msg, 8));
        size_t n = std::min(out.size() - off, block.size());
        std::memcpy(out.data() + off, block.data(), n);
        off += n;
    }
}

Bytes HmacDrbg::bytes(size_t n)
{
    Bytes out(n);
    fill(out);
    return out;
}

Hash256 HmacDrbg::hash256()
{
    Hash256 out;
    fill(out);
    return out;
}

uint64_t HmacDrbg::next_u64()
{
    uint8_t buf[8];
    fill(buf);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | buf[i];
    return v;
}

uint64_t HmacDrbg::uniform(uint64_t bound)
{
    if (bound == 0) throw ValidationError("uniform bound must be positive");
    uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

Bytes random_bytes(size_t n)
{
    Bytes out(n);
    if (n > 0 && RAND_bytes(out.data(), int(n)) != 1) throw CryptoError("RAND_bytes failed");
    return out;
}

Hash256 random_hash256()
{
    Hash256 out;
    if (RAND_bytes(out.data(), int(out.size())) != 1) throw CryptoError("RAND_bytes failed");
    return out;
}

namespace {

HmacDrbg* g_override = nullptr;

int det_bytes(unsigned char* buf, int num)
{
    if (!g_override) return 0;
    g_override->fill(std::span<uint8_t>(buf, size_t(num)));
    return 1;
}
int det_seed(const void*, int) { return 1; }
int det_add(const void*, int, double) { return 1; }
int det_status() { return 1; }

const RAND_METHOD DET_METHOD = {
    det_seed,    // seed
    det_bytes,   // bytes
    nullptr,     // cleanup
    det_add,     // add
    det_bytes,   // pseudorand
    det_status,  // status
};

} // namespace

DeterministicRandScope::DeterministicRandScope(uint64_t seed)
{
    if (g_override) throw ValidationError("DeterministicRandScope already active");
    g_override = new HmacDrbg(seed, "escrowsim-global-rand");
    if (RAND_set_rand_method(&DET_METHOD) != 1) {
        delete g_override;
        g_override = nullptr;
        throw CryptoError("RAND_set_rand_method failed");
    }
}

DeterministicRandScope::~DeterministicRandScope()
{
    RAND_set_rand_method(nullptr);
    delete g_override;
    g_override = nullptr;
}

} // namespace escrowsim
