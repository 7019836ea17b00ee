// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/aead.hpp>
#include <escrowsim/crypto/kdf.hpp>
#include <escrowsim/crypto/keys.hpp>
#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/crypto/wrap.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

const char WRAP_SALT[] = "ESCROWSIM-WRAP";

Bytes wrap_key(ByteSpan shared, ByteSpan ephemeral_pub, ByteSpan recipient_pub)
{
    Bytes info(ephemeral_pub.begin(), ephemeral_pub.end());
    info.insert(info.end(), recipient_pub.begin(), recipient_pub.end());
    return hkdf_sha256(shared, to_bytes(WRAP_SALT), info, AEAD_KEY_SIZE);
}

} // namespace

Bytes wrap_secret(ByteSpan recipient_pub, ByteSpan secret)
{
    X25519KeyPair ephemeral = X25519KeyPair::generate();
    SecureBytes shared = x25519_shared(ephemeral.priv, recipient_pub);
    Bytes key = wrap_key(shared, ephemeral.pub, recipient_pub);
    Bytes nonce = random_bytes(AEAD_NONCE_SIZE);

    ByteWriter w;
    w.raw(ByteSpan{ephemeral.pub});
    w.raw(ByteSpan{nonce});
    w.raw(aead_seal(key, nonce, recipient_pub, secret));
    return w.take();
}

SecureBytes unwrap_secret(ByteSpan recipient_priv, ByteSpan wrapped)
{
    if (wrapped.size() < CURVE25519_KEY_SIZE + AEAD_NONCE_SIZE + AEAD_TAG_SIZE)
        throw AuthenticationError("wrapped secret too short");
    ByteSpan ephemeral_pub = wrapped.subspan(0, CURVE25519_KEY_SIZE);
    ByteSpan nonce = wrapped.subspan(CURVE25519_KEY_SIZE, AEAD_NONCE_SIZE);
    ByteSpan body = wrapped.subspan(CURVE25519_KEY_SIZE + AEAD_NONCE_SIZE);

    X25519KeyPair self = X25519KeyPair::from_private(recipient_priv);
    SecureBytes shared = x25519_shared(recipient_priv, ephemeral_pub);
    Bytes key = wrap_key(shared, ephemeral_pub, self.pub);
    return SecureBytes(aead_open(key, nonce, self.pub, body));
}

} // namespace escrowsim
