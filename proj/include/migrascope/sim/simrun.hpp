#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "migrascope/feature.hpp"
#include "migrascope/sim/bridge.hpp"
#include "migrascope/sim/evm_ledger.hpp"
#include "migrascope/sim/observe.hpp"
#include "migrascope/sim/spl_ledger.hpp"

namespace migrascope::sim {

struct SimConfig {
    std::size_t token_count = 100;
    std::size_t user_count = 5;
    GasModel gas;
    std::uint32_t royalty_bps = 500;
    std::uint64_t rent_per_account = 2039280;
    std::uint64_t compute_budget = 1400000;
    std::uint64_t seed = 42;
    std::string collection_tag = "MIGR";
    bool oracle_enabled = true;
};

SimConfig load_sim_config(const std::string& path);
SimConfig parse_sim_config(const std::string& json_text);

struct SimUser {
    Keypair source_key;            // secp256k1 domain
    Keypair target_key;            // ed25519 domain
    EvmAddress source_address{};
    PublicKey target_wallet{};
};

/// Completed fixture run: final ledgers, migration records and a transcript
/// of one JSON line per state transition. Same config -> identical bytes.
struct SimulationRun {
    SimConfig config;
    EvmLikeLedger source;
    SplLikeLedger target;
    BridgeState bridge;
    std::vector<SimUser> users;
    std::vector<std::string> transcript; // JSON lines
    ObservationDescriptor observations;
    bool transfer_probe_source = false;  // non-owner rejected and owner accepted
    bool transfer_probe_target = false;
    bool permutation_check_passed = false;
    bool complete = false;

    std::string transcript_text() const;
};

/// Mints token_count tokens on the source chain (singles plus batches),
/// exercises transfer authorization probes on both chains, migrates every
/// token over the bridge and re-runs the target mints under two random
/// permutations to check order independence.
SimulationRun run_simulation(const SimConfig& config);

/// Reads the observation booleans for one feature off a finished run.
/// Error(FixtureIncomplete) when the run did not finish its probes.
ObservationDescriptor observe_feature(const SimulationRun& run, const FeatureId& feature);

/// observe_feature over every feature of the profile, in order.
Observations observe_all(const SimulationRun& run, const FeatureProfile& features);

} // namespace migrascope::sim
