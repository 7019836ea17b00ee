// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <fstream>

namespace escrowsim {

namespace fs = std::filesystem;

Bytes read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return data;
}

void write_file(const fs::path& path, ByteSpan data)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    out.close();
    if (!out) throw IoError("write failed: " + path.string());
}

void write_file_atomic(const fs::path& path, ByteSpan data)
{
    fs::path tmp = path;
    tmp += ".tmp";
    write_file(tmp, data);
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("rename failed: " + path.string() + ": " + ec.message());
    }
}

} // namespace escrowsim
