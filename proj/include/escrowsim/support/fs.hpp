// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_SUPPORT_FS_H
#define ESCROWSIM_SUPPORT_FS_H

#include <escrowsim/support/bytes.hpp>

#include <filesystem>

namespace escrowsim {

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteSpan data);

// Writes to a dot-temp in the same directory, then renames into place, so a
// crash never leaves a half-written file under the final name.
void write_file_atomic(const std::filesystem::path& path, ByteSpan data);

} // namespace escrowsim

#endif // ESCROWSIM_SUPPORT_FS_H
