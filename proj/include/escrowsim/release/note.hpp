// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_RELEASE_NOTE_H
#define ESCROWSIM_RELEASE_NOTE_H

#include <escrowsim/release/protocol.hpp>

#include <string>

namespace escrowsim {

struct RansomNoteInfo {
    Hash160 wallet{};
    uint64_t amount = 0;
    ReleaseMetadata metadata;
    uint32_t min_confirmations = 6;
};

// Plain-text simulated ransom note: key: value lines followed by the
// payment instructions. No styling, no intimidation copy.
std::string make_ransom_note(const RansomNoteInfo& info);

} // namespace escrowsim

#endif // ESCROWSIM_RELEASE_NOTE_H
