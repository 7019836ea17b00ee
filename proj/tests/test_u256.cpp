// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/support/u256.hpp>

#include <doctest.h>

using namespace escrowsim;

TEST_CASE("ordering and extremes")
{
    CHECK(U256::zero() < U256::pow2(0));
    CHECK(U256::pow2(0) < U256::pow2(1));
    CHECK(U256::pow2(63) < U256::pow2(64));
    CHECK(U256::pow2(127) < U256::pow2(128));
    CHECK(U256::pow2(255) < U256::max());
    CHECK(U256::pow2(10) == U256::pow2(10));
    CHECK(U256::zero().is_zero());
    CHECK_FALSE(U256::max().is_zero());
}

TEST_CASE("from_le_bytes matches pow2")
{
    Hash256 d{};
    d[31] = 0x80; // top bit of the little-endian integer
    CHECK(U256::from_le_bytes(d) == U256::pow2(255));
    d = Hash256{};
    d[0] = 1;
    CHECK(U256::from_le_bytes(d) == U256::pow2(0));
    d = Hash256{};
    d[8] = 1;
    CHECK(U256::from_le_bytes(d) == U256::pow2(64));
}

TEST_CASE("to_hex is 64 big-endian digits")
{
    CHECK(U256::zero().to_hex() == std::string(64, '0'));
    CHECK(U256::pow2(0).to_hex() == std::string(63, '0') + "1");
    CHECK(U256::max().to_hex() == std::string(64, 'f'));
}

// Spot values computed with an independent expander:
//   expand(0x21010000) = 2^256 (saturates)
//   expand(0x1f010000) = 2^240
//   expand(0x21100000) = 2^260 (saturates)
//   expand(0x1d00ffff) = 0xffff << 208
//   expand(0x207fffff) = 0x7fffff << 232
TEST_CASE("compact expansion")
{
    CHECK(U256::from_compact(0x1F010000) == U256::pow2(240));
    CHECK(U256::from_compact(0x21010000) == U256::max());
    CHECK(U256::from_compact(0x21100000) == U256::max());
    CHECK(U256::from_compact(0x1D00FFFF).to_hex() ==
          "00000000ffff0000000000000000000000000000000000000000000000000000");
    CHECK(U256::from_compact(0x207FFFFF).to_hex() ==
          "7fffff0000000000000000000000000000000000000000000000000000000000");
}

TEST_CASE("compact edge cases")
{
    CHECK(U256::from_compact(0).is_zero());
    // Sign bit set: negative target, treated as zero (nothing passes).
    CHECK(U256::from_compact(0x1D800000).is_zero());
    // exponent 1 shifts the mantissa right two bytes.
    CHECK(U256::from_compact(0x01000012).is_zero());
    // exponent 3 means no shift: target == mantissa.
    CHECK(U256::from_compact(0x03000012).to_hex() == std::string(62, '0') + "12");
    // exponent 2 shifts right one byte.
    CHECK(U256::from_compact(0x02001234).to_hex() == std::string(62, '0') + "12");
}

TEST_CASE("compact_from_pow2 round trips through from_compact")
{
    for (unsigned bit : {0u, 1u, 7u, 8u, 16u, 100u, 224u, 240u, 244u, 255u}) {
        CAPTURE(bit);
        CHECK(U256::from_compact(compact_from_pow2(bit)) == U256::pow2(bit));
    }
    CHECK(compact_from_pow2(240) == 0x21000001);
    CHECK(compact_from_pow2(244) == 0x21000010);
}

TEST_CASE("COMPACT_ALWAYS_PASS saturates so every digest passes")
{
    CHECK(U256::from_compact(COMPACT_ALWAYS_PASS) == U256::max());
    Hash256 worst{};
    worst.fill(0xFF);
    CHECK(U256::from_le_bytes(worst) <= U256::from_compact(COMPACT_ALWAYS_PASS));
}
