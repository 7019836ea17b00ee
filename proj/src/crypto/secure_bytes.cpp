// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/crypto/secure_bytes.hpp>

#include <openssl/crypto.h>

namespace escrowsim {

void SecureBytes::wipe()
{
    if (!m_data.empty()) OPENSSL_cleanse(m_data.data(), m_data.size());
    m_data.clear();
}

} // namespace escrowsim
