// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CLI_CORPUS_H
#define ESCROWSIM_CLI_CORPUS_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace escrowsim {

// Canned synthetic corpus shapes for experiments.
const std::vector<std::string>& corpus_profile_names();

// Fills an empty or missing root with profile-shaped files plus the corpus
// sentinel; contents are a pure function of (profile, file_count, seed).
// Returns total bytes written. Refuses a root that already has content.
uint64_t make_corpus(const std::filesystem::path& root, const std::string& profile,
                     uint64_t file_count, uint64_t seed);

} // namespace escrowsim

#endif // ESCROWSIM_CLI_CORPUS_H
