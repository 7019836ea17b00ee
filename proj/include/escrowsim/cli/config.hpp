// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CLI_CONFIG_H
#define ESCROWSIM_CLI_CONFIG_H

#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/support/u256.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace escrowsim {

// Everything a command needs, resolved before any action. Seed fixes all
// randomness, so equal config means an equal run.
struct ExperimentConfig {
    uint64_t seed = 1;
    uint32_t bits_exponent = 244; // toy network target, 2^exponent
    std::filesystem::path corpus_root;
    EngineMode mode = EngineMode::Reactive;
    std::string scheme = "signed"; // signed | spv | explorer
    bool cross_check = false;      // explorer scheme: verify approvals through SPV too
    uint32_t min_confirmations = 6;
    uint32_t n_extra_blocks = 0;
    uint32_t transition_cost_us = 0;
    uint64_t amount = 50000;
    bool keep_originals = false;

    std::string profile = "mixed"; // lifecycle synthetic corpus shape
    uint64_t profile_files = 20;

    uint64_t bench_files = 4;
    uint64_t bench_scale_divisor = 10; // shrinks the 15-250 MB ladder for desk runs

    uint32_t fake_trials = 30;
    std::vector<uint32_t> fake_n_values = {0, 2, 4, 6};

    std::filesystem::path escrow_override; // empty: escrow lives in the corpus root
    bool with_timings = false;  // include volatile "~" lines in rendered reports
    bool simulator_ack = false; // --i-understand-this-is-a-simulator

    uint32_t bits() const { return compact_from_pow2(bits_exponent); }

    // Simulation bookkeeping lives in the corpus root under .escrowsim-*
    // names, which the corpus engine never treats as victim files.
    std::filesystem::path state_path() const { return corpus_root / ".escrowsim-state"; }
    std::filesystem::path chain_path() const { return corpus_root / ".escrowsim-chain"; }
    std::filesystem::path ledger_path() const { return corpus_root / ".escrowsim-ledger"; }
    std::filesystem::path note_path() const { return corpus_root / ".escrowsim-note.txt"; }
    std::filesystem::path escrow_path() const
    {
        return escrow_override.empty() ? corpus_root / ".escrowsim-escrow" : escrow_override;
    }

    // Throws ValidationError when a field is out of range.
    void validate() const;
};

} // namespace escrowsim

#endif // ESCROWSIM_CLI_CONFIG_H
