// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cryptofile/capture.hpp>
#include <escrowsim/cryptofile/engine.hpp>
#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/support/fs.hpp>

namespace escrowsim {

CaptureResult capture_experiment(const std::vector<Bytes>& envelopes, ByteSpan vk_prv,
                                 const ExposureLedger& ledger)
{
    CaptureResult result;
    result.envelopes = envelopes.size();
    for (const Bytes& envelope : envelopes) {
        SecureBytes ek = unwrap_envelope_key(envelope, vk_prv);
        if (ledger.contains(ek.span())) result.exposed_keys += 1;
    }
    result.vk_prv_exposed = ledger.contains(vk_prv);
    return result;
}

CaptureResult capture_experiment(const std::filesystem::path& root, ByteSpan vk_prv,
                                 const ExposureLedger& ledger)
{
    std::vector<Bytes> envelopes;
    for (const std::filesystem::path& path : list_corpus_envelopes(root))
        envelopes.push_back(read_file(path));
    return capture_experiment(envelopes, vk_prv, ledger);
}

} // namespace escrowsim
