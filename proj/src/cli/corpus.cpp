// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/corpus.hpp>

#include <escrowsim/crypto/rng.hpp>
#include <escrowsim/cryptofile/engine.hpp>
#include <escrowsim/support/errors.hpp>
#include <escrowsim/support/fs.hpp>

#include <cstdio>

namespace escrowsim {

namespace {

namespace fs = std::filesystem;

struct FileSpec {
    std::string dir;
    std::string stem;
    std::string ext;
    uint64_t min_bytes;
    uint64_t max_bytes;
};

uint64_t span_bytes(HmacDrbg& drbg, uint64_t lo, uint64_t hi)
{
    return lo + drbg.uniform(hi - lo + 1);
}

} // namespace

const std::vector<std::string>& corpus_profile_names()
{
    static const std::vector<std::string> names{"document-heavy", "media-heavy", "mixed",
                                                "many-small-files"};
    return names;
}

uint64_t make_corpus(const fs::path& root, const std::string& profile, uint64_t file_count,
                     uint64_t seed)
{
    if (file_count == 0) throw ValidationError("corpus needs at least one file");
    if (fs::exists(root) && !fs::is_empty(root))
        throw ValidationError("corpus root is not empty: " + root.string());

    std::vector<FileSpec> cycle;
    if (profile == "document-heavy") {
        cycle = {{"docs", "report", ".txt", 2 << 10, 200 << 10},
                 {"docs", "notes", ".md", 1 << 10, 64 << 10},
                 {"docs", "ledger", ".csv", 4 << 10, 128 << 10}};
    } else if (profile == "media-heavy") {
        cycle = {{"media", "photo", ".jpg", 1 << 20, 3 << 20},
                 {"media", "clip", ".mp4", 2 << 20, 5 << 20}};
    } else if (profile == "mixed") {
        cycle = {{"docs", "report", ".txt", 1 << 10, 256 << 10},
                 {"media", "photo", ".jpg", 512 << 10, 5 << 20},
                 {"data", "dump", ".bin", 1 << 10, 1 << 20},
                 {"docs", "sheet", ".csv", 1 << 10, 64 << 10}};
    } else if (profile == "many-small-files") {
        cycle = {{"data", "item", ".dat", 256, 4 << 10}};
    } else {
        throw ValidationError("unknown corpus profile: " + profile);
    }

    fs::create_directories(root);
    write_file(root / CORPUS_SENTINEL, Bytes{});

    HmacDrbg drbg(seed, "corpus:" + profile);
    uint64_t total = 0;
    for (uint64_t i = 0; i < file_count; ++i) {
        const FileSpec& spec = cycle[i % cycle.size()];
        const uint64_t size = span_bytes(drbg, spec.min_bytes, spec.max_bytes);
        char name[128];
        std::snprintf(name, sizeof(name), "%s-%04llu%s", spec.stem.c_str(),
                      static_cast<unsigned long long>(i), spec.ext.c_str());
        fs::create_directories(root / spec.dir);
        write_file(root / spec.dir / name, drbg.bytes(size));
        total += size;
    }
    return total;
}

} // namespace escrowsim
