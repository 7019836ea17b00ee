// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_ENCLAVE_EXPOSURE_LEDGER_H
#define ESCROWSIM_ENCLAVE_EXPOSURE_LEDGER_H

#include <escrowsim/support/bytes.hpp>

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

namespace escrowsim {

// Append-only record of every plaintext secret that existed outside the
// simulated boundary: what a memory-forensics adversary could have captured.
// Timestamps are logical (the append index), keeping runs reproducible.
class ExposureLedger {
public:
    struct Entry {
        uint64_t timestamp = 0;
        std::string tag;
        Bytes secret;

        bool operator==(const Entry&) const = default;
    };

    ExposureLedger() = default;
    ExposureLedger(ExposureLedger&& other) noexcept : m_entries(std::move(other.m_entries)) {}
    ExposureLedger& operator=(ExposureLedger&& other) noexcept
    {
        if (this != &other) m_entries = std::move(other.m_entries);
        return *this;
    }

    void append(std::string_view tag, ByteSpan secret);

    // True iff needle occurs as a contiguous byte run in any entry.
    bool contains(ByteSpan needle) const;

    std::vector<Entry> entries() const;
    size_t size() const;

    Bytes serialize() const;
    static ExposureLedger deserialize(ByteSpan data);

    void save(const std::filesystem::path& path) const;
    static ExposureLedger load(const std::filesystem::path& path);
    // Missing file loads as an empty ledger (first run).
    static ExposureLedger load_or_empty(const std::filesystem::path& path);

private:
    mutable std::mutex m_mutex;
    std::vector<Entry> m_entries;
};

inline constexpr char LEDGER_MAGIC[] = "ESCROWSIM-LEDGR"; // stored with its NUL
inline constexpr uint32_t LEDGER_VERSION = 1;

} // namespace escrowsim

#endif // ESCROWSIM_ENCLAVE_EXPOSURE_LEDGER_H
