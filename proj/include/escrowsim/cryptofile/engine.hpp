// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_CRYPTOFILE_ENGINE_H
#define ESCROWSIM_CRYPTOFILE_ENGINE_H

#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/enclave/boundary.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace escrowsim {

// Opt-in interlock: corpus operations refuse to run unless this file exists
// in the corpus root. The engine cannot touch anything outside a marked root.
inline constexpr char CORPUS_SENTINEL[] = ".escrowsim-corpus";

struct FileReport {
    std::filesystem::path source;
    uint64_t bytes = 0;
    double seconds = 0; // wall time, volatile across runs
};

struct CorpusReport {
    EngineMode mode = EngineMode::Reactive;
    uint64_t files = 0;
    uint64_t bytes = 0;
    std::vector<FileReport> file_reports;
    BoundaryStats boundary;
    bool completed = true;
    std::string error; // first failure when !completed
};

struct DecryptReport {
    uint64_t files = 0;
    uint64_t bytes = 0;
    bool completed = true;
    std::string error;
};

void require_corpus_sentinel(const std::filesystem::path& root);

// Regular files under root in sorted order, skipping the sentinel, other
// .escrowsim-* artifacts, and existing envelopes.
std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& root);

// Envelope paths under root in sorted order.
std::vector<std::filesystem::path> list_corpus_envelopes(const std::filesystem::path& root);

// Writes path + ".esc" (temp-then-rename); removes the original only when
// replace_original. The path must live under a sentinel-marked root.
void encrypt_file(const std::filesystem::path& path, ByteSpan vk_pub, EngineMode mode,
                  EnclaveBoundary& boundary, bool replace_original);

// Writes the plaintext back beside the envelope (envelope path minus ".esc").
void decrypt_file(const std::filesystem::path& envelope_path, ByteSpan vk_prv,
                  bool remove_envelope);

CorpusReport encrypt_corpus(const std::filesystem::path& root, ByteSpan vk_pub, EngineMode mode,
                            EnclaveBoundary& boundary, bool replace_originals);

DecryptReport decrypt_corpus(const std::filesystem::path& root, ByteSpan vk_prv,
                             bool remove_envelopes);

} // namespace escrowsim

#endif // ESCROWSIM_CRYPTOFILE_ENGINE_H
