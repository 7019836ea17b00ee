// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CLI_REPORT_H
#define ESCROWSIM_CLI_REPORT_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace escrowsim {

// Structured plain-text run record. Every line is stable across runs with
// the same seed and config except the "~ " lines, which carry wall-clock
// measurements and render only on request.
class RunReport {
public:
    explicit RunReport(std::string command) : m_command(std::move(command)) {}

    void line(std::string text);
    void kv(std::string_view key, std::string_view value);
    void kv(std::string_view key, const char* value) { kv(key, std::string_view(value)); }
    void kv(std::string_view key, uint64_t value);
    void kv(std::string_view key, double value); // fixed six decimals
    void volatile_kv(std::string_view key, double value);
    void blank();

    const std::string& command() const { return m_command; }

    std::string render(bool with_timings) const;
    void save(const std::filesystem::path& path, bool with_timings) const;

private:
    struct Line {
        bool is_volatile = false;
        std::string text;
    };

    std::string m_command;
    std::vector<Line> m_lines;
};

// What a finished command hands back to main(): the report plus the process
// exit code (0 success, 2 refusal decision).
struct CommandOutcome {
    RunReport report;
    int exit_code = 0;
};

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_REFUSED = 2;
inline constexpr int EXIT_VALIDATION = 3;
inline constexpr int EXIT_IO = 4;

} // namespace escrowsim

#endif // ESCROWSIM_CLI_REPORT_H
