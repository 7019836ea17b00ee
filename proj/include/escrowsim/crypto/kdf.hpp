// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_KDF_H
#define ESCROWSIM_CRYPTO_KDF_H

#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

// HKDF-SHA256 (RFC 5869) extract-and-expand.
Bytes hkdf_sha256(ByteSpan ikm, ByteSpan salt, ByteSpan info, size_t length);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_KDF_H
