// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTOFILE_CAPTURE_H
#define ESCROWSIM_CRYPTOFILE_CAPTURE_H

#include <escrowsim/enclave/exposure_ledger.hpp>
#include <escrowsim/support/bytes.hpp>

#include <cstdint>
#include <filesystem>
#include <vector>

namespace escrowsim {

// Outcome of replaying a memory capture against a set of envelopes: how many
// per-file keys the attacker's trace would have handed over.
struct CaptureResult {
    uint64_t envelopes = 0;
    uint64_t exposed_keys = 0; // per-file keys present in the capture
    bool vk_prv_exposed = false;
};

// Unwraps each envelope's file key with the victim private key and searches
// the exposure ledger for it, then for the private key itself.
CaptureResult capture_experiment(const std::vector<Bytes>& envelopes, ByteSpan vk_prv,
                                 const ExposureLedger& ledger);

// Same, reading every envelope under a corpus root.
CaptureResult capture_experiment(const std::filesystem::path& root, ByteSpan vk_prv,
                                 const ExposureLedger& ledger);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTOFILE_CAPTURE_H
