#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "migrascope/assess.hpp"
#include "migrascope/dependency.hpp"
#include "migrascope/detection.hpp"
#include "migrascope/errors.hpp"
#include "migrascope/feature.hpp"
#include "migrascope/json_util.hpp"
#include "migrascope/profile.hpp"
#include "migrascope/registry.hpp"
#include "migrascope/report.hpp"
#include "migrascope/scanner.hpp"
#include "migrascope/sim/observe.hpp"
#include "migrascope/sim/simrun.hpp"

namespace fs = std::filesystem;
using namespace migrascope;

namespace {

struct Paths {
    std::string data_dir = "data";
    std::string profiles;
    std::string bindings;
    std::string rules;
    std::string fixture;
    std::string sim_config;
    std::string expectations;
    std::string oracle;
    std::string out_dir = ".";

    void resolve() {
        auto fallback = [&](std::string& slot, const char* relative) {
            if (slot.empty()) {
                slot = (fs::path(data_dir) / relative).string();
            }
        };
        fallback(profiles, "profiles");
        fallback(rules, "rules/detect.json");
        fallback(fixture, "fixtures/erc721-erc2981-profile.json");
        fallback(sim_config, "sim/config.json");
        fallback(expectations, "sim/expectations.json");
        fallback(oracle, "oracle/case-study-expected.json");
    }
};

// Picks the bindings file for a platform by platform_id, unless one was
// given explicitly.
BindingSet bindings_for(const Paths& paths, const std::string& platform_id) {
    if (!paths.bindings.empty()) {
        BindingSet set = load_bindings(paths.bindings);
        if (set.platform_id != platform_id) {
            raise(ErrorKind::ProfileParse, "bindings file " + paths.bindings + " targets " +
                                               set.platform_id + ", not " + platform_id);
        }
        return set;
    }
    fs::path dir = fs::path(paths.data_dir) / "bindings";
    if (fs::is_directory(dir)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".json") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& file : files) {
            try {
                BindingSet set = load_bindings(file.string());
                if (set.platform_id == platform_id) {
                    return set;
                }
            } catch (const Error&) {
                continue;
            }
        }
    }
    raise(ErrorKind::Io, "no bindings file found for platform " + platform_id);
}

void write_output(const Paths& paths, const std::string& name, const std::string& content) {
    fs::create_directories(paths.out_dir);
    write_text_file((fs::path(paths.out_dir) / name).string(), content);
}

int cmd_profile_validate(const std::string& file) {
    ArchitectureProfile profile = load_profile(file);
    ValidationResult result = validate_profile(profile);
    if (result.ok()) {
        std::cout << profile.platform_id << " " << profile.version << ": ok\n";
        return 0;
    }
    std::cout << profile.platform_id << " " << profile.version << ": " << result.summary()
              << "\n";
    return 1;
}

int cmd_profile_list(const Paths& paths) {
    ProfileRegistry registry = load_registry(paths.profiles);
    for (const std::string& id : registry.platform_ids()) {
        const ArchitectureProfile& profile = registry.lookup(id);
        std::cout << id << " " << profile.version;
        size_t rules = profile.realization_rules.size();
        std::cout << " (" << profile.primitives.size() << " primitives, " << rules
                  << " realization rules)\n";
    }
    return 0;
}

int cmd_scan(const Paths& paths, const std::string& input, std::string collection) {
    DetectionRules rules = load_detection_rules(paths.rules);
    std::string source = read_text_file(input);
    ContractDescriptor descriptor = scan_contract(source, rules.hints);
    for (const std::string& warning : descriptor.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    if (collection.empty()) {
        collection = fs::path(input).stem().string();
    }
    FeatureProfile profile = derive_feature_profile(descriptor, rules, collection);
    std::string serialized = serialize_feature_profile(profile);
    write_output(paths, "feature-profile.json", serialized);
    std::cout << "detected " << profile.features.size() << " features -> "
              << (fs::path(paths.out_dir) / "feature-profile.json").string() << "\n";
    return 0;
}

int cmd_map(const Paths& paths, const std::string& feature_file, const std::string& source) {
    ProfileRegistry registry = load_registry(paths.profiles);
    const ArchitectureProfile& profile = registry.lookup(source);
    FeatureProfile features = load_feature_profile(feature_file);
    BindingSet bindings = bindings_for(paths, source);
    std::vector<DependencySet> sets = build_dependency_sets(features, bindings, profile);
    FeatureLayerMatrix matrix = feature_layer_matrix(sets, profile);
    write_output(paths, "dependency-sets.json", serialize_dependency_sets(sets, source));
    write_output(paths, "feature-layer-matrix.json", serialize_matrix(matrix));
    write_output(paths, "feature-layer-matrix.md", render_matrix_markdown(matrix));
    std::cout << "mapped " << sets.size() << " features over " << source << "\n";
    return 0;
}

int cmd_assess(const Paths& paths, const std::string& feature_file, const std::string& source,
               const std::string& target, const std::string& format) {
    ProfileRegistry registry = load_registry(paths.profiles);
    const ArchitectureProfile& source_profile = registry.lookup(source);
    const ArchitectureProfile& target_profile = registry.lookup(target);
    FeatureProfile features = load_feature_profile(feature_file);
    BindingSet bindings = bindings_for(paths, source);
    std::vector<DependencySet> sets = build_dependency_sets(features, bindings, source_profile);
    PreservationReport report = assess(features, sets, source_profile, target_profile);

    RenderOptions json_options{RenderFormat::json, true, true};
    RenderOptions md_options{RenderFormat::markdown, true, true};
    if (format.empty() || format == "json") {
        write_output(paths, "report.json", render(report, json_options));
    }
    if (format.empty() || format == "md") {
        write_output(paths, "report.md", render(report, md_options));
    }
    for (const ReportEntry& entry : report.entries) {
        std::cout << entry.feature.name << ": " << to_string(entry.mismatch) << "\n";
    }
    return report.any_complete_mismatch() ? 1 : 0;
}

struct SimulateOutcome {
    sim::AgreementMatrix matrix;
    PreservationReport report;
    sim::SimulationRun run;
};

SimulateOutcome run_simulate(const Paths& paths, std::optional<std::uint64_t> seed) {
    sim::SimConfig config = sim::load_sim_config(paths.sim_config);
    if (seed) {
        config.seed = *seed;
    }
    ProfileRegistry registry = load_registry(paths.profiles);
    FeatureProfile features = load_feature_profile(paths.fixture);
    BindingSet bindings = bindings_for(paths, "ethereum");
    const ArchitectureProfile& source_profile = registry.lookup("ethereum");
    const ArchitectureProfile& target_profile = registry.lookup("solana");
    std::vector<DependencySet> sets = build_dependency_sets(features, bindings, source_profile);
    PreservationReport report = assess(features, sets, source_profile, target_profile);

    sim::SimulationRun run = sim::run_simulation(config);
    sim::Observations observations = sim::observe_all(run, features);
    sim::ExpectationSet expectations = sim::load_expectations(paths.expectations);
    sim::AgreementMatrix matrix = sim::compare_prediction(report, observations, expectations);
    return {std::move(matrix), std::move(report), std::move(run)};
}

int cmd_simulate(const Paths& paths, std::optional<std::uint64_t> seed) {
    SimulateOutcome outcome = run_simulate(paths, seed);
    write_output(paths, "transcript.jsonl", outcome.run.transcript_text());
    RenderOptions json_options{RenderFormat::json, true, true};
    RenderOptions md_options{RenderFormat::markdown, true, true};
    write_output(paths, "agreement.json", render_agreement(outcome.matrix, json_options));
    write_output(paths, "agreement.md", render_agreement(outcome.matrix, md_options));
    std::cout << outcome.matrix.summary() << "\n";
    return outcome.matrix.all_consistent() ? 0 : 1;
}

int cmd_validate_case_study(const Paths& paths, std::optional<std::uint64_t> seed) {
    nlohmann::json oracle = parse_json_or_raise(read_text_file(paths.oracle), paths.oracle);
    bool all_ok = true;
    auto check = [&](const std::string& label, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << label << "\n";
        all_ok = all_ok && ok;
    };

    SimulateOutcome outcome = run_simulate(paths, seed);
    write_output(paths, "transcript.jsonl", outcome.run.transcript_text());
    RenderOptions json_options{RenderFormat::json, true, true};
    RenderOptions md_options{RenderFormat::markdown, true, true};
    write_output(paths, "report.json", render(outcome.report, json_options));
    write_output(paths, "report.md", render(outcome.report, md_options));
    write_output(paths, "agreement.json", render_agreement(outcome.matrix, json_options));
    write_output(paths, "agreement.md", render_agreement(outcome.matrix, md_options));

    for (const auto& [feature, expected] : oracle.at("expected_classes").items()) {
        const ReportEntry* entry = outcome.report.entry(feature);
        bool ok = entry != nullptr && to_string(entry->mismatch) == expected.get<std::string>();
        check(feature + " = " + expected.get<std::string>(), ok);
    }
    if (oracle.contains("absent_note_must_contain")) {
        std::string needle = oracle.at("absent_note_must_contain").get<std::string>();
        std::string feature = oracle.value("absent_note_feature", std::string{});
        const ReportEntry* entry = outcome.report.entry(feature);
        bool found = false;
        if (entry != nullptr) {
            for (const auto& [id, verdict] : entry->availability) {
                (void)id;
                if (verdict.kind == Availability::absent &&
                    verdict.detail.find(needle) != std::string::npos) {
                    found = true;
                }
            }
        }
        check("absent verdict cites '" + needle + "'", found);
    }
    std::string expected_agreement = oracle.value("agreement", std::string{});
    check("agreement " + expected_agreement,
          outcome.matrix.summary().rfind(expected_agreement, 0) == 0);
    std::cout << (all_ok ? "case study consistent with bundled oracle\n"
                         : "case study deviates from bundled oracle\n");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"migrascope: cross-chain NFT migration compatibility analyzer"};
    app.require_subcommand(1);

    Paths paths;
    std::optional<std::uint64_t> seed;
    std::string format;
    app.add_option("--data", paths.data_dir, "data directory root");
    app.add_option("--profiles", paths.profiles, "profile directory");
    app.add_option("--bindings", paths.bindings, "feature-to-primitive bindings file");
    app.add_option("--rules", paths.rules, "feature detection rules file");
    app.add_option("--out", paths.out_dir, "output directory");

    auto* profile_cmd = app.add_subcommand("profile", "profile management");
    profile_cmd->require_subcommand(1);
    std::string profile_file;
    auto* profile_validate = profile_cmd->add_subcommand("validate", "validate a profile file");
    profile_validate->add_option("file", profile_file, "profile JSON")->required();
    auto* profile_list = profile_cmd->add_subcommand("list", "list registered profiles");

    std::string scan_input;
    std::string collection;
    auto* scan_cmd = app.add_subcommand("scan", "derive a feature profile from contract source or ABI");
    scan_cmd->add_option("file", scan_input, "contract source or ABI JSON")->required();
    scan_cmd->add_option("--collection", collection, "collection id for the output profile");

    std::string map_features;
    std::string map_source;
    auto* map_cmd = app.add_subcommand("map", "emit dependency sets and the feature-layer matrix");
    map_cmd->add_option("feature-profile", map_features, "feature profile JSON")->required();
    map_cmd->add_option("--source", map_source, "source platform id")->required();

    std::string assess_features;
    std::string assess_source;
    std::string assess_target;
    auto* assess_cmd = app.add_subcommand("assess", "classify feature preservation on a target");
    assess_cmd->add_option("feature-profile", assess_features, "feature profile JSON")->required();
    assess_cmd->add_option("--source", assess_source, "source platform id")->required();
    assess_cmd->add_option("--target", assess_target, "target platform id")->required();
    assess_cmd->add_option("--format", format, "json|md (default: both)")
        ->check(CLI::IsMember({"json", "md"}));

    auto* simulate_cmd = app.add_subcommand("simulate", "run the dual-ledger migration fixture");
    simulate_cmd->add_option("--config", paths.sim_config, "simulation config JSON");
    simulate_cmd->add_option("--seed", seed, "override the configured RNG seed");
    simulate_cmd->add_option("--feature-profile", paths.fixture, "feature profile to predict with");
    simulate_cmd->add_option("--expectations", paths.expectations, "expectation templates file");

    auto* vcs_cmd = app.add_subcommand("validate-case-study",
                                       "assess + simulate + agreement against the bundled oracle");
    vcs_cmd->add_option("--config", paths.sim_config, "simulation config JSON");
    vcs_cmd->add_option("--seed", seed, "override the configured RNG seed");
    vcs_cmd->add_option("--oracle", paths.oracle, "expected-results file");

    CLI11_PARSE(app, argc, argv);
    paths.resolve();

    try {
        if (*profile_cmd) {
            if (*profile_validate) {
                return cmd_profile_validate(profile_file);
            }
            if (*profile_list) {
                return cmd_profile_list(paths);
            }
        }
        if (*scan_cmd) {
            return cmd_scan(paths, scan_input, collection);
        }
        if (*map_cmd) {
            return cmd_map(paths, map_features, map_source);
        }
        if (*assess_cmd) {
            return cmd_assess(paths, assess_features, assess_source, assess_target, format);
        }
        if (*simulate_cmd) {
            return cmd_simulate(paths, seed);
        }
        if (*vcs_cmd) {
            return cmd_validate_case_study(paths, seed);
        }
    } catch (const Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 2;
}
