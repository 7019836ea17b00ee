// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/cli/config.hpp>

#include <escrowsim/cli/corpus.hpp>
#include <escrowsim/support/errors.hpp>

#include <algorithm>

namespace escrowsim {

void ExperimentConfig::validate() const
{
    if (bits_exponent < 200 || bits_exponent > 255)
        throw ValidationError("bits-exponent must be in [200, 255]; lower targets make toy mining "
                              "impractically slow");
    if (scheme != "signed" && scheme != "spv" && scheme != "explorer")
        throw ValidationError("unknown scheme: " + scheme);
    if (min_confirmations == 0) throw ValidationError("min-confirmations must be at least 1");
    if (amount == 0) throw ValidationError("amount must be at least 1");
    if (transition_cost_us > 1000000)
        throw ValidationError("transition-cost-us above one second is not useful");

    const auto& profiles = corpus_profile_names();
    if (std::find(profiles.begin(), profiles.end(), profile) == profiles.end())
        throw ValidationError("unknown corpus profile: " + profile);
    if (profile_files == 0) throw ValidationError("profile-files must be at least 1");

    if (bench_files == 0) throw ValidationError("bench-files must be at least 1");
    if (bench_scale_divisor == 0) throw ValidationError("bench-scale-divisor must be at least 1");

    if (fake_trials == 0) throw ValidationError("fake-trials must be at least 1");
    if (fake_n_values.empty()) throw ValidationError("fake-n-values must not be empty");
}

} // namespace escrowsim
