// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_TRANSACTION_H
#define ESCROWSIM_CHAINKIT_TRANSACTION_H

#include <escrowsim/support/bytes.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace escrowsim {

inline constexpr size_t OP_RETURN_MAX = 80;

struct PayToAddress {
    Hash160 address{};
    bool operator==(const PayToAddress&) const = default;
};

struct OpReturn {
    Bytes payload; // <= 80 bytes
    bool operator==(const OpReturn&) const = default;
};

struct Output {
    uint64_t amount = 0; // satoshis
    std::variant<PayToAddress, OpReturn> script;
    bool operator==(const Output&) const = default;
};

// Output-only transaction: no inputs or signature scripts, which the release
// schemes never need. Identity is the double-SHA-256 of the canonical
// serialization, so two transactions with identical outputs are the same
// transaction.
struct Transaction {
    std::vector<Output> outputs;

    Bytes serialize() const;
    static Transaction deserialize(ByteReader& r);
    static Transaction deserialize(ByteSpan data); // whole-buffer variant

    Hash256 txid() const;

    // At most one OP_RETURN output, every OP_RETURN payload <= 80 bytes.
    bool well_formed() const;

    // The OP_RETURN payload, if this transaction carries one.
    std::optional<ByteSpan> op_return() const;

    bool operator==(const Transaction&) const = default;
};

// One PayToAddress output plus one OP_RETURN output carrying metadata.
// Throws if metadata exceeds 80 bytes.
Transaction build_payment_tx(const Hash160& address, uint64_t amount, ByteSpan metadata);

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_TRANSACTION_H
