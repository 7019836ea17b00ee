// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTOFILE_BENCH_H
#define ESCROWSIM_CRYPTOFILE_BENCH_H

#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/enclave/boundary.hpp>

#include <cstdint>

namespace escrowsim {

struct BenchConfig {
    uint64_t files = 16;
    uint64_t file_bytes = 1 << 20;
    uint64_t transition_cost_us = 50;
    uint64_t seed = 1;
};

struct BenchModeResult {
    EngineMode mode = EngineMode::Reactive;
    uint64_t files = 0;
    uint64_t bytes = 0;
    uint64_t crossings = 0; // boundary enters + exits attributable to encryption
    double encrypt_seconds = 0;
    double decrypt_seconds = 0;
};

// Encrypts and decrypts the same in-memory corpus under both engines and
// compares the measured proactive slowdown against the crossing-count model:
// extra time = (proactive crossings - reactive crossings) * transition cost.
struct BenchResult {
    BenchConfig config;
    BenchModeResult reactive;
    BenchModeResult proactive;
    double modeled_extra_seconds = 0;
    double measured_extra_seconds = 0;
    // measured / modeled; meaningful only when transition cost > 0.
    double model_ratio = 0;
    // (proactive - reactive) / reactive, per phase.
    double encrypt_overhead = 0;
    double decrypt_overhead = 0;
};

// Expected boundary crossings for one file of the given size.
uint64_t modeled_crossings(EngineMode mode, uint64_t file_bytes);

BenchResult run_bench(const BenchConfig& config);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTOFILE_BENCH_H
