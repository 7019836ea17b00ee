// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CHAINKIT_CHAIN_IO_H
#define ESCROWSIM_CHAINKIT_CHAIN_IO_H

#include <escrowsim/chainkit/chain.hpp>

#include <filesystem>

namespace escrowsim {

inline constexpr char CHAIN_MAGIC[] = "ESCROWSIM-CHAIN"; // stored with its NUL
inline constexpr uint32_t CHAIN_VERSION = 1;

Bytes serialize_chain(const Chain& chain);

// Parses and fully revalidates (linkage, PoW, merkle roots).
Chain deserialize_chain(ByteSpan data);

void save_chain(const std::filesystem::path& path, const Chain& chain);
Chain load_chain(const std::filesystem::path& path);

} // namespace escrowsim

#endif // ESCROWSIM_CHAINKIT_CHAIN_IO_H
