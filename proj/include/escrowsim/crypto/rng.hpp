// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_RNG_H
#define ESCROWSIM_CRYPTO_RNG_H

#include <escrowsim/support/bytes.hpp>

#include <cstdint>
#include <span>
#include <string_view>

namespace escrowsim {

// HMAC-SHA256 counter generator. Deterministic per (seed, personalization);
// used wherever a test or experiment needs its own reproducible stream.
class HmacDrbg {
public:
    explicit HmacDrbg(uint64_t seed, std::string_view personalization = {});
    explicit HmacDrbg(ByteSpan seed, std::string_view personalization = {});

    void fill(std::span<uint8_t> out);
    Bytes bytes(size_t n);
    Hash256 hash256();
    uint64_t next_u64();
    // Unbiased draw from [0, bound), bound > 0.
    uint64_t uniform(uint64_t bound);

private:
    Hash256 m_key;
    uint64_t m_counter = 0;
};

// Draws from OpenSSL's RAND (and therefore honors DeterministicRandScope).
Bytes random_bytes(size_t n);
Hash256 random_hash256();

// While alive, replaces the process-global OpenSSL RAND with a seeded
// deterministic generator, making every key, nonce, and salt drawn through
// OpenSSL reproducible. Single-threaded use only; scopes must not nest.
class DeterministicRandScope {
public:
    explicit DeterministicRandScope(uint64_t seed);
    ~DeterministicRandScope();
    DeterministicRandScope(const DeterministicRandScope&) = delete;
    DeterministicRandScope& operator=(const DeterministicRandScope&) = delete;
};

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_RNG_H
