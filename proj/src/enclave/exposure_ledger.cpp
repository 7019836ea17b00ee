// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/enclave/exposure_ledger.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

namespace escrowsim {

void ExposureLedger::append(std::string_view tag, ByteSpan secret)
{
    std::lock_guard lock(m_mutex);
    Entry e;
    e.timestamp = m_entries.size();
    e.tag = std::string(tag);
    e.secret.assign(secret.begin(), secret.end());
    m_entries.push_back(std::move(e));
}

bool ExposureLedger::contains(ByteSpan needle) const
{
    std::lock_guard lock(m_mutex);
    for (const Entry& e : m_entries)
        if (contains_subsequence(e.secret, needle)) return true;
    return false;
}

std::vector<ExposureLedger::Entry> ExposureLedger::entries() const
{
    std::lock_guard lock(m_mutex);
    return m_entries;
}

size_t ExposureLedger::size() const
{
    std::lock_guard lock(m_mutex);
    return m_entries.size();
}

Bytes ExposureLedger::serialize() const
{
    std::lock_guard lock(m_mutex);
    ByteWriter w;
    w.raw(ByteSpan(reinterpret_cast<const uint8_t*>(LEDGER_MAGIC), sizeof(LEDGER_MAGIC)));
    w.u32(LEDGER_VERSION);
    w.u64(m_entries.size());
    for (const Entry& e : m_entries) {
        w.u64(e.timestamp);
        w.str8(e.tag);
        w.u32(uint32_t(e.secret.size()));
        w.raw(e.secret);
    }
    return w.take();
}

ExposureLedger ExposureLedger::deserialize(ByteSpan data)
{
    ByteReader r(data);
    r.expect_magic(ByteSpan(reinterpret_cast<const uint8_t*>(LEDGER_MAGIC), sizeof(LEDGER_MAGIC)),
                   "ledger magic");
    uint32_t version = r.u32("ledger version");
    if (version != LEDGER_VERSION)
        throw ParseError("unsupported ledger version " + std::to_string(version));
    uint64_t count = r.u64("ledger entry count");
    ExposureLedger ledger;
    for (uint64_t i = 0; i < count; ++i) {
        Entry e;
        e.timestamp = r.u64("ledger entry timestamp");
        e.tag = r.str8("ledger entry tag");
        uint32_t len = r.u32("ledger entry secret length");
        ByteSpan secret = r.raw(len, "ledger entry secret");
        e.secret.assign(secret.begin(), secret.end());
        ledger.m_entries.push_back(std::move(e));
    }
    r.expect_done("ledger file");
    return ledger;
}

void ExposureLedger::save(const std::filesystem::path& path) const
{
    write_file_atomic(path, serialize());
}

ExposureLedger ExposureLedger::load(const std::filesystem::path& path)
{
    return deserialize(read_file(path));
}

ExposureLedger ExposureLedger::load_or_empty(const std::filesystem::path& path)
{
    if (!std::filesystem::exists(path)) return ExposureLedger{};
    return load(path);
}

} // namespace escrowsim
