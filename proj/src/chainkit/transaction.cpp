// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/chainkit/transaction.hpp>
#include <escrowsim/crypto/hash.hpp>
#include <escrowsim/support/errors.hpp>

namespace escrowsim {

namespace {

// Output kind tags borrow the leading opcode of the script they stand in for.
constexpr uint8_t KIND_PAY_TO_ADDRESS = 0x76; // OP_DUP
constexpr uint8_t KIND_OP_RETURN = 0x6A;      // OP_RETURN

} // namespace

Bytes Transaction::serialize() const
{
    if (!well_formed()) throw ValidationError("transaction violates output rules");
    ByteWriter w;
    w.u32(uint32_t(outputs.size()));
    for (const Output& out : outputs) {
        w.u64(out.amount);
        if (const auto* pay = std::get_if<PayToAddress>(&out.script)) {
            w.u8(KIND_PAY_TO_ADDRESS);
            w.raw(pay->address);
        } else {
            const auto& ret = std::get<OpReturn>(out.script);
            w.u8(KIND_OP_RETURN);
            w.u8(uint8_t(ret.payload.size()));
            w.raw(ret.payload);
        }
    }
    return w.take();
}

Transaction Transaction::deserialize(ByteReader& r)
{
    Transaction tx;
    uint32_t count = r.u32("transaction output count");
    for (uint32_t i = 0; i < count; ++i) {
        Output out;
        out.amount = r.u64("output amount");
        uint8_t kind = r.u8("output kind");
        if (kind == KIND_PAY_TO_ADDRESS) {
            out.script = PayToAddress{r.arr<20>("output address")};
        } else if (kind == KIND_OP_RETURN) {
            uint8_t len = r.u8("OP_RETURN length");
            if (len > OP_RETURN_MAX) throw ParseError("OP_RETURN payload exceeds 80 bytes");
            ByteSpan payload = r.raw(len, "OP_RETURN payload");
            out.script = OpReturn{Bytes(payload.begin(), payload.end())};
        } else {
            throw ParseError("unknown output kind " + std::to_string(kind));
        }
        tx.outputs.push_back(std::move(out));
    }
    if (!tx.well_formed()) throw ParseError("transaction violates output rules");
    return tx;
}

Transaction Transaction::deserialize(ByteSpan data)
{
    ByteReader r(data);
    Transaction tx = deserialize(r);
    r.expect_done("transaction");
    return tx;
}

Hash256 Transaction::txid() const
{
    return double_sha256(serialize());
}

bool Transaction::well_formed() const
{
    size_t returns = 0;
    for (const Output& out : outputs) {
        if (const auto* ret = std::get_if<OpReturn>(&out.script)) {
            if (ret->payload.size() > OP_RETURN_MAX) return false;
            ++returns;
        }
    }
    return returns <= 1;
}

std::optional<ByteSpan> Transaction::op_return() const
{
    for (const Output& out : outputs) {
        if (const auto* ret = std::get_if<OpReturn>(&out.script)) return ByteSpan{ret->payload};
    }
    return std::nullopt;
}

Transaction build_payment_tx(const Hash160& address, uint64_t amount, ByteSpan metadata)
{
    if (metadata.size() > OP_RETURN_MAX)
        throw ValidationError("OP_RETURN metadata exceeds 80 bytes: " + std::to_string(metadata.size()));
    Transaction tx;
    tx.outputs.push_back(Output{amount, PayToAddress{address}});
    tx.outputs.push_back(Output{0, OpReturn{Bytes(metadata.begin(), metadata.end())}});
    return tx;
}

} // namespace escrowsim
