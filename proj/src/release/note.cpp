// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/release/note.hpp>

#include <sstream>

namespace escrowsim {

std::string make_ransom_note(const RansomNoteInfo& info)
{
    std::ostringstream out;
    out << "ESCROWSIM SIMULATED RANSOM NOTE\n";
    out << "This file was produced by a research simulator. No real funds or\n";
    out << "real victims are involved.\n";
    out << "\n";
    out << "wallet-address: " << to_hex(info.wallet) << "\n";
    out << "amount: " << info.amount << "\n";
    out << "attacker-key-id: " << to_hex(info.metadata.ak_fp) << "\n";
    out << "victim-key-id: " << to_hex(info.metadata.vk_fp) << "\n";
    out << "enclave-nonce: " << to_hex(info.metadata.nonce) << "\n";
    out << "payment-metadata: " << to_hex(info.metadata.serialize()) << "\n";
    out << "min-confirmations: " << info.min_confirmations << "\n";
    out << "\n";
    out << "Simulated recovery steps:\n";
    out << "  1. Submit a payment of the amount above to the wallet address,\n";
    out << "     attaching the payment-metadata record as OP_RETURN data.\n";
    out << "  2. Wait until the payment reaches min-confirmations depth.\n";
    out << "  3. Run the release step with the scheme of your choice\n";
    out << "     (signed, spv, or explorer) to obtain the victim key.\n";
    return out.str();
}

} // namespace escrowsim
