// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTO_SECURE_BYTES_H
#define ESCROWSIM_CRYPTO_SECURE_BYTES_H

#include <escrowsim/support/bytes.hpp>

namespace escrowsim {

// Byte buffer for key material: wiped on destruction, move-only so copies
// of secrets are always deliberate.
class SecureBytes {
public:
    SecureBytes() = default;
    explicit SecureBytes(size_t n) : m_data(n) {}
    explicit SecureBytes(Bytes b) : m_data(std::move(b)) {}
    SecureBytes(const SecureBytes&) = delete;
    SecureBytes& operator=(const SecureBytes&) = delete;
    SecureBytes(SecureBytes&& other) noexcept : m_data(std::move(other.m_data)) { other.m_data.clear(); }
    SecureBytes& operator=(SecureBytes&& other) noexcept
    {
        if (this != &other) {
            wipe();
            m_data = std::move(other.m_data);
            other.m_data.clear();
        }
        return *this;
    }
    ~SecureBytes() { wipe(); }

    uint8_t* data() { return m_data.data(); }
    const uint8_t* data() const { return m_data.data(); }
    size_t size() const { return m_data.size(); }
    bool empty() const { return m_data.empty(); }
    ByteSpan span() const { return ByteSpan(m_data.data(), m_data.size()); }
    operator ByteSpan() const { return span(); }

    SecureBytes clone() const { return SecureBytes(Bytes(m_data)); }

    void wipe();

private:
    Bytes m_data;
};

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTO_SECURE_BYTES_H
