// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/support/errors.hpp>

#include <doctest.h>

using namespace escrowsim;

// RFC 7748 section 6.1.
TEST_CASE("x25519 rfc vector")
{
    Bytes alice_priv = from_hex("77076d0a7318a57d3c16c17251b26645df4c2f87ebc0992ab177fba51db92c2a");
    Bytes bob_priv = from_hex("5dab087e624a8a4b79e17f8b83800ee66f3bb1292618b6fd1c2f8b27ff88e0eb");

    auto alice = X25519KeyPair::from_private(alice_priv);
    auto bob = X25519KeyPair::from_private(bob_priv);
    CHECK(to_hex(alice.pub) == "8520f0098930a754748b7ddcb43ef75a0dbf3a0d26381af4eba4a98eaa9b4e6a");
    CHECK(to_hex(bob.pub) == "de9edb7d7b7dc1b4d35b61c2ece435373f8343c85b78674dadfc7e146f882b4f");

    SecureBytes s1 = x25519_shared(alice.priv, bob.pub);
    SecureBytes s2 = x25519_shared(bob.priv, alice.pub);
    CHECK(to_hex(s1.span()) == "4a5d9d5ba4ce2de1728e3bf480350f25e07e21c947d19e3376f09b3c1e161742");
    CHECK(to_hex(s2.span()) == to_hex(s1.span()));
}

TEST_CASE("x25519 generated pairs agree")
{
    auto a = X25519KeyPair::generate();
    auto b = X25519KeyPair::generate();
    CHECK(a.pub != b.pub);
    CHECK(to_hex(x25519_shared(a.priv, b.pub).span()) == to_hex(x25519_shared(b.priv, a.pub).span()));
}

// RFC 8032 section 7.1 test 1 (empty message).
TEST_CASE("ed25519 rfc vector")
{
    Bytes seed = from_hex("9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60");
    auto pair = Ed25519KeyPair::from_private(seed);
    CHECK(to_hex(pair.pub) == "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");

    Bytes sig = ed25519_sign(pair.priv, {});
    CHECK(to_hex(sig) ==
          "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e06522490155"
          "5fb8821590a33bacc61e39701cf9b46bd25bf5f0595bbe24655141438e7a100b");
    CHECK(ed25519_verify(pair.pub, {}, sig));
}

TEST_CASE("ed25519 sign and verify")
{
    auto pair = Ed25519KeyPair::generate();
    Bytes msg = to_bytes("peer handshake transcript");
    Bytes sig = ed25519_sign(pair.priv, msg);
    CHECK(sig.size() == ED25519_SIG_SIZE);
    CHECK(ed25519_verify(pair.pub, msg, sig));

    Bytes other = to_bytes("peer handshake transcripT");
    CHECK_FALSE(ed25519_verify(pair.pub, other, sig));

    Bytes bad_sig = sig;
    bad_sig[10] ^= 1;
    CHECK_FALSE(ed25519_verify(pair.pub, msg, bad_sig));

    auto stranger = Ed25519KeyPair::generate();
    CHECK_FALSE(ed25519_verify(stranger.pub, msg, sig));
    CHECK_FALSE(ed25519_verify(pair.pub, msg, Bytes(63, 0)));
}

TEST_CASE("rsa sign verify and der round trip")
{
    RsaKeyPair key = RsaKeyPair::generate();
    REQUIRE(key.valid());
    CHECK(key.signature_size() == 256);

    Bytes msg = to_bytes("release transaction digest");
    Bytes sig = key.sign(msg);
    CHECK(sig.size() == 256);

    Bytes pub = key.public_der();
    CHECK(rsa_verify(pub, msg, sig));
    Bytes tampered = sig;
    tampered[0] ^= 1;
    CHECK_FALSE(rsa_verify(pub, msg, tampered));
    Bytes other_msg = to_bytes("release transaction digesT");
    CHECK_FALSE(rsa_verify(pub, other_msg, sig));

    RsaKeyPair restored = RsaKeyPair::from_private_der(key.private_der());
    CHECK(restored.public_der() == pub);
    CHECK(rsa_verify(pub, msg, restored.sign(msg)));
}

TEST_CASE("rsa rejects malformed der")
{
    Bytes junk = to_bytes("not a key");
    CHECK_THROWS_AS(RsaKeyPair::from_private_der(junk), ParseError);
    CHECK_FALSE(rsa_verify(junk, junk, junk));
}

TEST_CASE("seeded scope makes keygen reproducible")
{
    Bytes rsa1, rsa2, x1, x2, ed1, ed2;
    {
        DeterministicRandScope scope(777);
        rsa1 = RsaKeyPair::generate().private_der();
        x1 = X25519KeyPair::generate().pub;
        ed1 = Ed25519KeyPair::generate().pub;
    }
    {
        DeterministicRandScope scope(777);
        rsa2 = RsaKeyPair::generate().private_der();
        x2 = X25519KeyPair::generate().pub;
        ed2 = Ed25519KeyPair::generate().pub;
    }
    CHECK(rsa1 == rsa2);
    CHECK(x1 == x2);
    CHECK(ed1 == ed2);

    {
        DeterministicRandScope scope(778);
        CHECK(RsaKeyPair::generate().private_der() != rsa1);
    }
}
