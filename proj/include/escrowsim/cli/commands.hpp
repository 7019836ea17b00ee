// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CLI_COMMANDS_H
#define ESCROWSIM_CLI_COMMANDS_H

#include <escrowsim/cli/config.hpp>
#include <escrowsim/cli/report.hpp>

#include <filesystem>

namespace escrowsim {

// One function per subcommand. Each seeds process randomness from the
// config, so a repeated run reproduces every key, nonce, and report line.
// Refusal decisions come back as exit_code 2; real errors throw.

CommandOutcome cmd_keygen(const ExperimentConfig& config);
CommandOutcome cmd_chain_mine(const ExperimentConfig& config, uint64_t blocks);
CommandOutcome cmd_encrypt(const ExperimentConfig& config);
CommandOutcome cmd_pay(const ExperimentConfig& config, uint32_t confirmations);
CommandOutcome cmd_sign(const ExperimentConfig& config);
CommandOutcome cmd_publish(const ExperimentConfig& config);
CommandOutcome cmd_release(const ExperimentConfig& config);
CommandOutcome cmd_decrypt(const ExperimentConfig& config);
CommandOutcome cmd_recover(const ExperimentConfig& config, const std::filesystem::path& escrow);
CommandOutcome cmd_bench(const ExperimentConfig& config);
CommandOutcome cmd_capture(const ExperimentConfig& config);
CommandOutcome cmd_fake_chain_cost(const ExperimentConfig& config);
CommandOutcome cmd_lifecycle(const ExperimentConfig& config);

} // namespace escrowsim

#endif // ESCROWSIM_CLI_COMMANDS_H
