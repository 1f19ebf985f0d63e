#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "migrascope/errors.hpp"
#include "migrascope/profile.hpp"
#include "migrascope/registry.hpp"
#include "support/paths.hpp"

using namespace migrascope;

namespace {

ArchitectureProfile bundled(const std::string& name) {
    return load_profile(testsupport::data_path("profiles/" + name + ".json"));
}

} // namespace

TEST_CASE("register then lookup returns the profile unchanged") {
    ProfileRegistry registry;
    ArchitectureProfile solana = bundled("solana");
    registry.register_profile(solana);
    CHECK(registry.lookup("solana") == solana);
    CHECK(registry.has("solana"));
    CHECK_THROWS_AS(registry.lookup("near"), Error);
}

TEST_CASE("re-registering the same version is stale; greater versions replace") {
    ProfileRegistry registry;
    ArchitectureProfile profile = bundled("ethereum");
    registry.register_profile(profile);
    CHECK_THROWS_AS(registry.register_profile(profile), Error);

    ArchitectureProfile older = profile;
    older.version = "0.9.0";
    CHECK_THROWS_AS(registry.register_profile(older), Error);

    ArchitectureProfile newer = profile;
    newer.version = "1.1.0";
    newer.notes = "updated";
    registry.register_profile(newer);
    CHECK(registry.lookup("ethereum").version == "1.1.0");
}

TEST_CASE("invalid profiles are rejected with their violations attached") {
    ProfileRegistry registry;
    ArchitectureProfile broken = bundled("ethereum");
    broken.primitives.clear();
    try {
        registry.register_profile(broken);
        FAIL("expected InvalidProfile");
    } catch (const Error& error) {
        CHECK(error.kind() == ErrorKind::InvalidProfile);
        CHECK(std::string(error.what()).find("layer-coverage") != std::string::npos);
    }
}

TEST_CASE("registration order does not matter") {
    ProfileRegistry first;
    first.register_profile(bundled("ethereum"));
    first.register_profile(bundled("solana"));
    ProfileRegistry second;
    second.register_profile(bundled("solana"));
    second.register_profile(bundled("ethereum"));
    CHECK(first.lookup("ethereum") == second.lookup("ethereum"));
    CHECK(first.lookup("solana") == second.lookup("solana"));
    CHECK(first.platform_ids() == second.platform_ids());
}

TEST_CASE("guarantee lookup reports direct offerings and realization rules") {
    ProfileRegistry registry = load_registry(testsupport::data_path("profiles"));
    REQUIRE(registry.has("solana"));
    REQUIRE(registry.has("ethereum"));
    REQUIRE(registry.has("flow"));
    REQUIRE(registry.has("tezos"));

    // No mandatory transfer interception anywhere in the base profiles.
    GuaranteeLookup interception = registry.find_by_guarantee("solana",
                                                              "mandatory-transfer-interception");
    CHECK(interception.direct.empty());
    CHECK(interception.realized_by.empty());
    CHECK(!interception.warning.has_value()); // in vocabulary, just unoffered

    GuaranteeLookup parallel = registry.find_by_guarantee("solana", "parallel-execution");
    CHECK(parallel.direct.count("tx.exec.sealevel-parallel") == 1);

    GuaranteeLookup sequential = registry.find_by_guarantee("solana", "sequential-execution");
    CHECK(sequential.direct.empty());
    REQUIRE(sequential.realized_by.size() == 1);
    CHECK(sequential.realized_by[0].capability == "sequential-execution");

    GuaranteeLookup unknown = registry.find_by_guarantee("solana", "quantum-teleportation");
    CHECK(unknown.direct.empty());
    CHECK(unknown.realized_by.empty());
    REQUIRE(unknown.warning.has_value());
    CHECK(unknown.warning->find("unknown tag") != std::string::npos);

    CHECK_THROWS_AS(registry.find_by_guarantee("near", "parallel-execution"), Error);
}

TEST_CASE("loading a directory keeps the newest snapshot per platform") {
    namespace fs = std::filesystem;
    std::string dir = testsupport::fresh_temp_dir("registry-dir");
    ArchitectureProfile v1 = bundled("ethereum");
    ArchitectureProfile v2 = v1;
    v2.version = "2.0.0";
    // Filename order loads the newer snapshot first.
    save_profile(v2, dir + "/a-ethereum-2.json");
    save_profile(v1, dir + "/b-ethereum-1.json");
    fs::copy_file(testsupport::data_path("profiles/vocabulary.json"), dir + "/vocabulary.json");

    ProfileRegistry registry = load_registry(dir);
    CHECK(registry.lookup("ethereum").version == "2.0.0");
    CHECK(registry.vocabulary().has_value());
}

TEST_CASE("every bundled tag and capability is in the vocabulary") {
    ProfileRegistry registry = load_registry(testsupport::data_path("profiles"));
    REQUIRE(registry.vocabulary().has_value());
    const Vocabulary& vocabulary = *registry.vocabulary();
    for (const std::string& id : registry.platform_ids()) {
        const ArchitectureProfile& profile = registry.lookup(id);
        for (const Primitive& primitive : profile.primitives) {
            for (const std::string& tag : primitive.guarantees) {
                INFO(id << " / " << primitive.id << " / " << tag);
                CHECK(vocabulary.known(tag));
            }
        }
        for (const RealizationRule& rule : profile.realization_rules) {
            INFO(id << " rule " << rule.capability);
            CHECK(vocabulary.known(rule.capability));
        }
        for (const auto& [tag, note] : profile.absence_notes) {
            (void)note;
            INFO(id << " absence note " << tag);
            CHECK(vocabulary.known(tag));
        }
    }
}

TEST_CASE("rules never realize a capability a primitive offers directly") {
    ProfileRegistry registry = load_registry(testsupport::data_path("profiles"));
    for (const std::string& id : registry.platform_ids()) {
        const ArchitectureProfile& profile = registry.lookup(id);
        for (const RealizationRule& rule : profile.realization_rules) {
            GuaranteeLookup lookup = registry.find_by_guarantee(id, rule.capability);
            CHECK(lookup.direct.empty());
        }
    }
}
