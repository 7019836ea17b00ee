// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/commands.hpp>
#include <escrowsim/cryptofile/envelope.hpp>
#include <escrowsim/support/errors.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace escrowsim;

namespace {

int fail(const char* what, int code)
{
    std::fprintf(stderr, "escrowsim: error: %s\n", what);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sandboxed study of enclave-conditioned ransomware key release. "
                 "Every operation is simulated, deterministic, and confined to the corpus root."};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from a key=value file");
    app.fallthrough();

    ExperimentConfig config;
    std::string mode_name = "reactive";
    std::filesystem::path report_path;

    app.add_option("--seed", config.seed, "Seed fixing every key, nonce, and corpus byte")
        ->capture_default_str();
    app.add_option("--bits-exponent", config.bits_exponent, "Toy proof-of-work target, 2^exponent")
        ->capture_default_str();
    app.add_option("--corpus", config.corpus_root, "Corpus root; all writes stay inside it");
    app.add_option("--mode", mode_name, "Encryption engine, reactive or proactive")
        ->capture_default_str();
    app.add_option("--scheme", config.scheme, "Release scheme, signed, spv, or explorer")
        ->capture_default_str();
    app.add_flag("--cross-check", config.cross_check,
                 "Explorer scheme only: re-verify approvals through the SPV path");
    app.add_option("--min-confirmations", config.min_confirmations,
                   "Confirmations the release policy demands")
        ->capture_default_str();
    app.add_option("--extra-blocks", config.n_extra_blocks,
                   "Validated blocks required above the payment")
        ->capture_default_str();
    app.add_option("--transition-cost-us", config.transition_cost_us,
                   "Simulated microseconds per enclave boundary crossing")
        ->capture_default_str();
    app.add_option("--amount", config.amount, "Ransom amount in toy units")->capture_default_str();
    app.add_flag("--keep-originals", config.keep_originals,
                 "Encrypt keeps plaintexts, decrypt keeps envelopes");
    app.add_option("--profile", config.profile, "Synthetic corpus shape for lifecycle")
        ->capture_default_str();
    app.add_option("--profile-files", config.profile_files, "Synthetic corpus file count")
        ->capture_default_str();
    app.add_option("--bench-files", config.bench_files, "Files per bench ladder size")
        ->capture_default_str();
    app.add_option("--bench-scale-divisor", config.bench_scale_divisor,
                   "Shrinks the 15-250 MB bench ladder by this factor")
        ->capture_default_str();
    app.add_option("--fake-trials", config.fake_trials, "Forgery trials per depth point")
        ->capture_default_str();
    app.add_option("--fake-n-values", config.fake_n_values,
                   "Forged extra-block depths to price (repeatable)");
    app.add_option("--escrow-file", config.escrow_override,
                   "Escrow location; default lives in the corpus root");
    app.add_flag("--with-timings", config.with_timings,
                 "Include volatile wall-clock lines in the report");
    app.add_flag("--i-understand-this-is-a-simulator", config.simulator_ack,
                 "Required before any command that encrypts files");
    app.add_option("--report", report_path, "Also write the report to this path");

    CLI::App* keygen = app.add_subcommand("keygen", "Provision attacker and victim keys");
    CLI::App* chain = app.add_subcommand("chain", "Operate the local toy chain");
    chain->require_subcommand(1);
    CLI::App* chain_mine = chain->add_subcommand("mine", "Append marker blocks");
    uint64_t mine_blocks = 1;
    chain_mine->add_option("--blocks", mine_blocks, "Blocks to append")->capture_default_str();
    CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt the corpus and drop the note");
    CLI::App* pay = app.add_subcommand("pay", "Record the ransom payment on the chain");
    uint32_t pay_confirmations = 0;
    CLI::Option* pay_conf_opt = pay->add_option(
        "--confirmations", pay_confirmations, "Payment depth to mine (default: min-confirmations)");
    CLI::App* sign = app.add_subcommand("sign", "Attacker scans the chain and signs the metadata");
    CLI::App* publish = app.add_subcommand("publish", "Publish the signature as OP_RETURN parts");
    CLI::App* release = app.add_subcommand("release", "Run the enclave release verifier");
    CLI::App* decrypt = app.add_subcommand("decrypt", "Restore plaintexts with the released key");
    CLI::App* recover = app.add_subcommand("recover", "Restore the victim key from an escrow file");
    std::filesystem::path recover_escrow;
    recover->add_option("--escrow", recover_escrow, "Escrow file to recover from")->required();
    CLI::App* bench = app.add_subcommand("bench", "Model vs measured boundary-crossing overhead");
    CLI::App* capture = app.add_subcommand("capture", "Replay a memory capture against envelopes");
    CLI::App* fake = app.add_subcommand("fake-chain-cost", "Price checkpoint-rooted forgeries");
    CLI::App* lifecycle =
        app.add_subcommand("lifecycle", "Full run: corpus, keys, encrypt, pay, release, decrypt");
    for (CLI::App* sub : {keygen, chain, chain_mine, encrypt, pay, sign, publish, release, decrypt,
                          recover, bench, capture, fake, lifecycle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_VALIDATION;
    }

    try {
        config.mode = engine_mode_from_name(mode_name);

        CommandOutcome outcome = [&] {
            if (app.got_subcommand(keygen)) return cmd_keygen(config);
            if (app.got_subcommand(chain)) return cmd_chain_mine(config, mine_blocks);
            if (app.got_subcommand(encrypt)) return cmd_encrypt(config);
            if (app.got_subcommand(pay)) {
                const uint32_t depth =
                    pay_conf_opt->count() ? pay_confirmations : config.min_confirmations;
                return cmd_pay(config, depth);
            }
            if (app.got_subcommand(sign)) return cmd_sign(config);
            if (app.got_subcommand(publish)) return cmd_publish(config);
            if (app.got_subcommand(release)) return cmd_release(config);
            if (app.got_subcommand(decrypt)) return cmd_decrypt(config);
            if (app.got_subcommand(recover)) return cmd_recover(config, recover_escrow);
            if (app.got_subcommand(bench)) return cmd_bench(config);
            if (app.got_subcommand(capture)) return cmd_capture(config);
            if (app.got_subcommand(fake)) return cmd_fake_chain_cost(config);
            return cmd_lifecycle(config);
        }();

        const std::string text = outcome.report.render(config.with_timings);
        std::fputs(text.c_str(), stdout);
        if (!report_path.empty()) outcome.report.save(report_path, config.with_timings);
        return outcome.exit_code;
    } catch (const ValidationError& e) {
        return fail(e.what(), EXIT_VALIDATION);
    } catch (const ParseError& e) {
        return fail(e.what(), EXIT_VALIDATION);
    } catch (const AuthenticationError& e) {
        return fail(e.what(), EXIT_VALIDATION);
    } catch (const CryptoError& e) {
        return fail(e.what(), EXIT_VALIDATION);
    } catch (const UntrustedEndpointError& e) {
        return fail(e.what(), EXIT_VALIDATION);
    } catch (const TransportError& e) {
        return fail(e.what(), EXIT_IO);
    } catch (const IoError& e) {
        return fail(e.what(), EXIT_IO);
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(e.what(), EXIT_IO);
    }
}
