// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cryptofile/engine.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <algorithm>
#include <chrono>

namespace escrowsim {

namespace fs = std::filesystem;

namespace {

bool is_envelope_path(const fs::path& p)
{
    return p.extension() == ENVELOPE_SUFFIX;
}

bool is_artifact_name(const std::string& name)
{
    return name.rfind(".escrowsim-", 0) == 0;
}

// Interlock: refuse to touch a path unless some ancestor carries the
// sentinel. Returns the marked root.
fs::path find_marked_root(const fs::path& path)
{
    fs::path dir = fs::absolute(path).parent_path();
    while (true) {
        if (fs::exists(dir / CORPUS_SENTINEL)) return dir;
        fs::path parent = dir.parent_path();
        if (parent == dir) break;
        dir = parent;
    }
    throw ValidationError("refusing to operate outside a corpus root: no " +
                          std::string(CORPUS_SENTINEL) + " above " + path.string());
}

} // namespace

void require_corpus_sentinel(const fs::path& root)
{
    if (!fs::is_directory(root))
        throw ValidationError("corpus root is not a directory: " + root.string());
    if (!fs::exists(root / CORPUS_SENTINEL))
        throw ValidationError("corpus root lacks the opt-in sentinel " +
                              std::string(CORPUS_SENTINEL) + ": " + root.string());
}

std::vector<fs::path> list_corpus_files(const fs::path& root)
{
    require_corpus_sentinel(root);
    std::vector<fs::path> out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (is_envelope_path(p) || is_artifact_name(p.filename().string())) continue;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<fs::path> list_corpus_envelopes(const fs::path& root)
{
    require_corpus_sentinel(root);
    std::vector<fs::path> out;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && is_envelope_path(entry.path())) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

void encrypt_file(const fs::path& path, ByteSpan vk_pub, EngineMode mode,
                  EnclaveBoundary& boundary, bool replace_original)
{
    find_marked_root(path);
    Bytes contents = read_file(path);
    Bytes envelope = envelope_encrypt(contents, vk_pub, mode, boundary);
    fs::path out = path;
    out += ENVELOPE_SUFFIX;
    write_file_atomic(out, envelope);
    if (replace_original) fs::remove(path);
}

void decrypt_file(const fs::path& envelope_path, ByteSpan vk_prv, bool remove_envelope)
{
    if (!is_envelope_path(envelope_path))
        throw ValidationError("not an envelope path (expected " + std::string(ENVELOPE_SUFFIX) +
                              "): " + envelope_path.string());
    Bytes envelope = read_file(envelope_path);
    Bytes plaintext = envelope_decrypt(envelope, vk_prv);
    fs::path out = envelope_path;
    out.replace_extension();
    write_file_atomic(out, plaintext);
    if (remove_envelope) fs::remove(envelope_path);
}

CorpusReport encrypt_corpus(const fs::path& root, ByteSpan vk_pub, EngineMode mode,
                            EnclaveBoundary& boundary, bool replace_originals)
{
    CorpusReport report;
    report.mode = mode;
    for (const fs::path& path : list_corpus_files(root)) {
        FileReport fr;
        fr.source = path;
        auto start = std::chrono::steady_clock::now();
        try {
            fr.bytes = fs::file_size(path);
            encrypt_file(path, vk_pub, mode, boundary, replace_originals);
        } catch (const std::exception& e) {
            report.completed = false;
            report.error = path.string() + ": " + e.what();
            break;
        }
        fr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.files += 1;
        report.bytes += fr.bytes;
        report.file_reports.push_back(std::move(fr));
    }
    report.boundary = boundary.stats();
    return report;
}

DecryptReport decrypt_corpus(const fs::path& root, ByteSpan vk_prv, bool remove_envelopes)
{
    DecryptReport report;
    for (const fs::path& envelope : list_corpus_envelopes(root)) {
        try {
            uint64_t size = fs::file_size(envelope);
            decrypt_file(envelope, vk_prv, remove_envelopes);
            report.bytes += size;
            ++report.files;
        } catch (const std::exception& e) {
            report.completed = false;
            report.error = envelope.string() + ": " + e.what();
            break;
        }
    }
    return report;
}

} // namespace escrowsim
