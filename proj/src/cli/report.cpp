// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/report.hpp>
#include <escrowsim/support/fs.hpp>

#include <cstdio>

namespace escrowsim {

namespace {

std::string fixed6(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

} // namespace

void RunReport::line(std::string text)
{
    m_lines.push_back({false, std::move(text)});
}

void RunReport::kv(std::string_view key, std::string_view value)
{
    line(std::string(key) + ": " + std::string(value));
}

void RunReport::kv(std::string_view key, uint64_t value)
{
    kv(key, std::to_string(value));
}

void RunReport::kv(std::string_view key, double value)
{
    kv(key, fixed6(value));
}

void RunReport::volatile_kv(std::string_view key, double value)
{
    m_lines.push_back({true, "~ " + std::string(key) + ": " + fixed6(value)});
}

void RunReport::blank()
{
    line("");
}

std::string RunReport::render(bool with_timings) const
{
    std::string out = "# escrowsim report v1\ncommand: " + m_command + "\n";
    for (const Line& l : m_lines) {
        if (l.is_volatile && !with_timings) continue;
        out += l.text;
        out += '\n';
    }
    return out;
}

void RunReport::save(const std::filesystem::path& path, bool with_timings) const
{
    const std::string text = render(with_timings);
    write_file_atomic(path, ByteSpan(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

} // namespace escrowsim
