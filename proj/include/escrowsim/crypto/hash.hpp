// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_HASH_H
#define ESCROWSIM_CRYPTO_HASH_H

#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

Hash256 sha256(ByteSpan data);
Hash256 sha256_concat(ByteSpan a, ByteSpan b);
Hash256 double_sha256(ByteSpan data);
Hash256 double_sha256_concat(ByteSpan a, ByteSpan b);
Hash256 hmac_sha256(ByteSpan key, ByteSpan msg);

// First 20 bytes of SHA-256 over the serialized key; the short key
// identifier carried in OP_RETURN metadata.
Hash160 fingerprint20(ByteSpan key_bytes);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_HASH_H
