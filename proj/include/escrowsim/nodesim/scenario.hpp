// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_SCENARIO_H
#define ESCROWSIM_NODESIM_SCENARIO_H

#include <escrowsim/release/verifier.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace escrowsim {

// Canned end-to-end runs: a provisioned victim enclave talking to scripted
// services over real transport. Same name + seed gives a byte-identical
// transcript on either transport.
struct ScenarioConfig {
    std::string name = "scheme2-honest";
    uint64_t seed = 1;
    std::string transport = "local"; // "local" or "tcp"
};

struct ScenarioResult {
    std::string name;
    bool released = false;
    RefusalReason reason = RefusalReason::None;
    std::vector<std::string> transcript;
};

const std::vector<std::string>& scenario_names();

ScenarioResult run_scenario(const ScenarioConfig& config);

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_SCENARIO_H
