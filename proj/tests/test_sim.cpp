#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "migrascope/errors.hpp"
#include "migrascope/sim/bridge.hpp"
#include "migrascope/sim/evm_ledger.hpp"
#include "migrascope/sim/observe.hpp"
#include "migrascope/sim/pda.hpp"
#include "migrascope/sim/simrun.hpp"
#include "migrascope/sim/spl_ledger.hpp"
#include "support/paths.hpp"

using namespace migrascope;
using namespace migrascope::sim;

namespace {

Keypair secp_key(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return generate_keypair(KeyDomain::secp256k1_ecdsa, rng);
}

Keypair ed_key(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return generate_keypair(KeyDomain::ed25519_eddsa, rng);
}

SimConfig small_config() {
    SimConfig config;
    config.token_count = 12;
    config.user_count = 3;
    config.seed = 7;
    return config;
}

} // namespace

TEST_CASE("source mints assign 1, 2, 3 and record owners") {
    EvmLikeLedger ledger;
    EvmAddress owner = secp_key(1).evm_address();
    CHECK(ledger.mint(owner, "u1") == 1);
    CHECK(ledger.mint(owner, "u2") == 2);
    CHECK(ledger.mint(owner, "u3") == 3);
    CHECK(ledger.owner_of(2) == owner);
    CHECK(ledger.token_uri(3) == "u3");
    CHECK(!ledger.owner_of(4).has_value());
}

TEST_CASE("a hundred mints fill ids 1..100") {
    EvmLikeLedger ledger;
    EvmAddress owner = secp_key(2).evm_address();
    for (int i = 0; i < 100; ++i) {
        ledger.mint(owner, "uri-" + std::to_string(i));
    }
    CHECK(ledger.token_count() == 100);
    CHECK(ledger.next_id() == 101);
    for (std::uint64_t id = 1; id <= 100; ++id) {
        CHECK(ledger.owner_of(id) == owner);
    }
}

TEST_CASE("batch gas is exactly affine and bounded by the block limit") {
    GasModel gas;
    EvmLikeLedger ledger(gas);
    EvmAddress owner = secp_key(3).evm_address();

    auto batch_gas = [&](std::size_t count) {
        std::vector<std::string> uris(count, "u");
        ledger.batch_mint(owner, uris);
        return ledger.last_tx_gas();
    };
    std::uint64_t g1 = batch_gas(1);
    std::uint64_t g2 = batch_gas(2);
    std::uint64_t g4 = batch_gas(4);
    CHECK(g1 == gas.base_per_tx + gas.per_mint);
    CHECK(g2 - g1 == gas.per_mint);
    CHECK(g4 - g2 == 2 * gas.per_mint);

    // Boundary from direct evaluation of the affine inequality.
    std::size_t boundary = gas.max_batch_size();
    CHECK(gas.batch_cost(boundary) <= gas.block_gas_limit);
    CHECK(gas.batch_cost(boundary + 1) > gas.block_gas_limit);

    EvmLikeLedger fresh(gas);
    CHECK(fresh.batch_mint(owner, std::vector<std::string>(boundary, "u")).size() == boundary);
    std::size_t before = fresh.token_count();
    CHECK_THROWS_AS(fresh.batch_mint(owner, std::vector<std::string>(boundary + 1, "u")), Error);
    CHECK(fresh.token_count() == before); // no partial mint
}

TEST_CASE("a batch of one matches a single mint") {
    EvmLikeLedger a, b;
    EvmAddress owner = secp_key(4).evm_address();
    std::uint64_t single = a.mint(owner, "u");
    std::vector<std::uint64_t> batch = b.batch_mint(owner, {"u"});
    REQUIRE(batch.size() == 1);
    CHECK(single == batch[0]);
    CHECK(a.owner_of(single) == b.owner_of(batch[0]));
    CHECK(a.token_uri(single) == b.token_uri(batch[0]));
    CHECK(a.last_tx_gas() == b.last_tx_gas());
}

TEST_CASE("source transfers require the owner or an approved operator") {
    EvmLikeLedger ledger;
    Keypair owner = secp_key(5);
    Keypair thief = secp_key(6);
    Keypair operator_key = secp_key(7);
    std::uint64_t id = ledger.mint(owner.evm_address(), "u");

    CHECK_THROWS_AS(ledger.transfer(id, thief, thief.evm_address()), Error);
    CHECK(ledger.owner_of(id) == owner.evm_address());

    ledger.approve(id, owner, operator_key.evm_address());
    ledger.transfer(id, operator_key, operator_key.evm_address());
    CHECK(ledger.owner_of(id) == operator_key.evm_address());
}

TEST_CASE("pda derivation is deterministic, distinct and keyless") {
    ProgramId program = SplLikeLedger::token_program_id();
    DerivedAddress first = derive_pda({seed_bytes(std::string("MIGR")), seed_bytes(7)}, program);
    DerivedAddress second = derive_pda({seed_bytes(std::string("MIGR")), seed_bytes(7)}, program);
    CHECK(first.address == second.address);
    CHECK(first.bump == second.bump);
    CHECK(first.address.back() != 0xFF);

    // Pairwise distinct across the 100-token fixture id range.
    std::set<AccountAddress> addresses;
    for (std::uint64_t id = 1; id <= 100; ++id) {
        addresses.insert(
            derive_pda({seed_bytes(std::string("MIGR")), seed_bytes(id)}, program).address);
    }
    CHECK(addresses.size() == 100);

    // Disjoint from every keypair-derived address in a generated key set.
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        PublicKey key = generate_keypair(KeyDomain::ed25519_eddsa, rng).public_key();
        AccountAddress as_address{};
        std::copy(key.begin(), key.end(), as_address.begin());
        CHECK(addresses.count(as_address) == 0);
    }

    CHECK_THROWS_AS(derive_pda({}, program), Error);
}

TEST_CASE("target mint creates mint, token account and metadata with royalties") {
    SplLikeLedger ledger;
    PublicKey creator = ed_key(9).public_key();
    AccountAddress mint = ledger.mint_nft(creator, {seed_bytes(std::string("M")), seed_bytes(1)},
                                          "M #1", "M", "ipfs://u/1", 500,
                                          {Creator{creator, 100}});
    CHECK(ledger.owner_of(mint) == creator);
    auto metadata = ledger.metadata_of(mint);
    REQUIRE(metadata.has_value());
    CHECK(metadata->seller_fee_basis_points == 500);
    CHECK(metadata->uri == "ipfs://u/1");
    CHECK(metadata->name == "M #1");
    CHECK(ledger.check_exclusivity());

    CHECK_THROWS_AS(ledger.mint_nft(creator, {seed_bytes(std::string("M")), seed_bytes(1)},
                                    "again", "M", "x", 0, {}),
                    Error);
}

TEST_CASE("rent refunds exactly what creation charged") {
    SplLikeLedger ledger(2039280, 1400000);
    PublicKey wallet = ed_key(10).public_key();
    std::uint64_t baseline = ledger.rent_escrowed();
    AccountAddress mint = ledger.mint_nft(wallet, {seed_bytes(std::string("R")), seed_bytes(1)},
                                          "R", "R", "u", 0, {});
    CHECK(ledger.rent_escrowed() == baseline + 3 * ledger.rent_per_account());

    // Move the token away; the emptied source token account can then close.
    PublicKey other = ed_key(11).public_key();
    ledger.transfer(mint, ed_key(10), other);
    AccountAddress emptied = ledger.token_account_address(wallet, mint);
    std::uint64_t escrow_before = ledger.rent_escrowed();
    std::uint64_t refund = ledger.close_account(emptied);
    CHECK(refund == ledger.rent_per_account());
    CHECK(escrow_before - ledger.rent_escrowed() == refund);

    // A full create/close cycle sums to zero escrow change.
    CHECK_THROWS_AS(ledger.close_account(emptied), Error);
}

TEST_CASE("target transfers require the holding wallet or its delegate") {
    SplLikeLedger ledger;
    Keypair owner = ed_key(12);
    Keypair delegate = ed_key(13);
    Keypair thief = ed_key(14);
    AccountAddress mint = ledger.mint_nft(owner.public_key(),
                                          {seed_bytes(std::string("T")), seed_bytes(1)}, "T", "T",
                                          "u", 0, {});
    CHECK_THROWS_AS(ledger.transfer(mint, thief, thief.public_key()), Error);
    ledger.approve_delegate(mint, owner, delegate.public_key());
    ledger.transfer(mint, delegate, delegate.public_key());
    CHECK(ledger.owner_of(mint) == delegate.public_key());
    CHECK(ledger.check_exclusivity());
}

TEST_CASE("signatures never verify across key domains") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 100; ++i) {
        KeyDomain domain = i % 2 == 0 ? KeyDomain::secp256k1_ecdsa : KeyDomain::ed25519_eddsa;
        KeyDomain other = domain == KeyDomain::secp256k1_ecdsa ? KeyDomain::ed25519_eddsa
                                                               : KeyDomain::secp256k1_ecdsa;
        Keypair key = generate_keypair(domain, rng);
        std::string message = "msg-" + std::to_string(i);
        Signature signature = key.sign(message);
        CHECK(verify(domain, key.public_key(), message, signature));
        CHECK(!verify(other, key.public_key(), message, signature));
        Keypair twin{other, key.secret};
        CHECK(!verify(other, key.public_key(), message, twin.sign(message)));
    }
}

TEST_CASE("bridge burns, attests and mints with the id as an annotation") {
    EvmLikeLedger source;
    SplLikeLedger target;
    BridgeState bridge("MIGR");
    SignatureLinkOracle oracle;
    Keypair owner = secp_key(16);
    Keypair wallet = ed_key(17);
    for (int i = 0; i < 10; ++i) {
        source.mint(owner.evm_address(), "ipfs://u/" + std::to_string(i + 1));
    }

    MigrationRecord record =
        bridge.migrate(source, target, 7, oracle, owner, wallet.public_key());
    CHECK(!source.owner_of(7).has_value()); // burned
    CHECK(source.burn_count() == 1);
    auto metadata = target.metadata_of(record.minted_mint);
    REQUIRE(metadata.has_value());
    CHECK(metadata->name.find("#7") != std::string::npos);
    CHECK(metadata->uri == "ipfs://u/7");
    CHECK(target.owner_of(record.minted_mint) == wallet.public_key());

    CHECK_THROWS_AS(bridge.migrate(source, target, 7, oracle, owner, wallet.public_key()),
                    Error);

    Keypair outsider = secp_key(18);
    CHECK_THROWS_AS(bridge.migrate(source, target, 8, oracle, outsider, wallet.public_key()),
                    Error);

    SignatureLinkOracle off(false);
    CHECK_THROWS_AS(bridge.migrate(source, target, 8, off, owner, wallet.public_key()), Error);
}

TEST_CASE("migrating the whole fixture is a bijection onto target mints") {
    EvmLikeLedger source;
    SplLikeLedger target;
    BridgeState bridge("MIGR");
    SignatureLinkOracle oracle;
    Keypair owner = secp_key(19);
    Keypair wallet = ed_key(20);
    for (int i = 1; i <= 100; ++i) {
        source.mint(owner.evm_address(), "ipfs://u/" + std::to_string(i));
    }
    std::set<AccountAddress> mints;
    for (std::uint64_t id = 1; id <= 100; ++id) {
        mints.insert(
            bridge.migrate(source, target, id, oracle, owner, wallet.public_key()).minted_mint);
    }
    CHECK(mints.size() == 100); // injective: distinct ids, distinct mints
    CHECK(source.token_count() == 0);
    CHECK(source.mint_count() - source.burn_count() == source.token_count());
    CHECK(source.burn_count() == 100);
    CHECK(bridge.records().size() == 100);
    for (std::uint64_t id = 1; id <= 100; ++id) {
        CHECK(bridge.records().count(id) == 1);
    }
    CHECK(target.check_exclusivity());
}

TEST_CASE("burned ids never reappear and the counter never decreases") {
    EvmLikeLedger source;
    Keypair owner = secp_key(21);
    for (int i = 0; i < 5; ++i) {
        source.mint(owner.evm_address(), "u");
    }
    source.burn(3);
    CHECK(!source.owner_of(3).has_value());
    CHECK(source.next_id() == 6);
    CHECK(source.mint(owner.evm_address(), "u") == 6);
    CHECK(!source.owner_of(3).has_value());
    CHECK(source.mint_count() - source.burn_count() == source.token_count());
}

TEST_CASE("the fixture run completes with the documented observations") {
    SimulationRun run = run_simulation(small_config());
    REQUIRE(run.complete);
    CHECK(run.permutation_check_passed);
    CHECK(run.transfer_probe_source);
    CHECK(run.transfer_probe_target);

    const ObservationDescriptor& seen = run.observations;
    CHECK(seen.numeric_id_primary.source);
    CHECK(!seen.numeric_id_primary.target);
    CHECK(seen.owner_to_tokens_native.source);
    CHECK(!seen.owner_to_tokens_native.target);
    CHECK(seen.batch_atomic_single_tx.source);
    CHECK(!seen.batch_atomic_single_tx.target);
    CHECK(seen.transfer_owner_or_delegate.source);
    CHECK(seen.transfer_owner_or_delegate.target);
    CHECK(!seen.key_domain_reused);
    CHECK(seen.uri_identical);
    CHECK(seen.royalty_params_identical);

    CHECK(run.source.token_count() == 0);
    CHECK(run.bridge.records().size() == run.config.token_count);
    CHECK(run.target.check_exclusivity());

    ObservationDescriptor via_feature =
        observe_feature(run, make_feature_id("identity-mechanism"));
    CHECK(via_feature == seen);

    SimulationRun incomplete;
    incomplete.complete = false;
    CHECK_THROWS_AS(observe_feature(incomplete, make_feature_id("identity-mechanism")), Error);
}

TEST_CASE("same seed, same transcript; different seed, different keys") {
    SimConfig config = small_config();
    SimulationRun first = run_simulation(config);
    SimulationRun second = run_simulation(config);
    CHECK(first.transcript_text() == second.transcript_text());

    config.seed = 8;
    SimulationRun third = run_simulation(config);
    CHECK(first.transcript_text() != third.transcript_text());
}

TEST_CASE("oracle outage aborts the bridge leg") {
    SimConfig config = small_config();
    config.oracle_enabled = false;
    CHECK_THROWS_AS(run_simulation(config), Error);
}

TEST_CASE("prediction comparison flags tampered observations") {
    ExpectationSet expectations =
        load_expectations(testsupport::data_path("sim/expectations.json"));

    PreservationReport report;
    report.source_platform = "ethereum";
    report.target_platform = "solana";
    ReportEntry metadata;
    metadata.feature = make_feature_id("metadata-linkage");
    metadata.availability["meta.link.string-uri-storage"] = {Availability::available, "x", ""};
    metadata.mismatch = MismatchClass::natively_preserved;
    report.entries.push_back(metadata);

    ObservationDescriptor seen;
    seen.uri_identical = true;
    Observations observations{{make_feature_id("metadata-linkage"), seen}};

    AgreementMatrix ok = compare_prediction(report, observations, expectations);
    REQUIRE(ok.rows.size() == 1);
    CHECK(ok.rows[0].consistent);
    CHECK(ok.summary() == "1/1 predictions consistent");

    observations[0].second.uri_identical = false;
    AgreementMatrix bad = compare_prediction(report, observations, expectations);
    CHECK(!bad.rows[0].consistent);
    CHECK(bad.summary() == "0/1 predictions consistent");

    Observations wrong_features{{make_feature_id("transfer-logic"), seen}};
    CHECK_THROWS_AS(compare_prediction(report, wrong_features, expectations), Error);
    CHECK_THROWS_AS(compare_prediction(report, {}, expectations), Error);
}
