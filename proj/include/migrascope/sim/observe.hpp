#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "migrascope/assess.hpp"
#include "migrascope/feature.hpp"

namespace migrascope::sim {

struct ChainPair {
    bool source = false;
    bool target = false;

    bool operator==(const ChainPair&) const = default;
};

/// Booleans read off the finished fixture run by direct state inspection.
struct ObservationDescriptor {
    ChainPair numeric_id_primary;
    ChainPair owner_to_tokens_native;
    ChainPair batch_atomic_single_tx;
    ChainPair transfer_owner_or_delegate;
    bool key_domain_reused = false;
    bool uri_identical = false;
    bool royalty_params_identical = false;

    bool operator==(const ObservationDescriptor&) const = default;

    /// Field access by the kebab-case names used in the expectations data.
    /// chain is "source", "target" or "" for cross-chain fields.
    std::optional<bool> field(const std::string& name, const std::string& chain) const;
    void set_field(const std::string& name, const std::string& chain, bool value);
};

/// Per-feature observations, in report feature order.
using Observations = std::vector<std::pair<FeatureId, ObservationDescriptor>>;

struct ExpectationCheck {
    std::string field;
    std::string chain; // "source", "target" or "" (cross-chain)
    bool expect = true;
};

/// What a given predicted class is expected to look like for one feature.
struct ExpectationTemplate {
    std::string feature;
    MismatchClass predicted = MismatchClass::natively_preserved;
    std::vector<ExpectationCheck> checks;
};

struct ExpectationSet {
    std::vector<ExpectationTemplate> templates;

    const ExpectationTemplate* find(const std::string& feature, MismatchClass predicted) const;
};

ExpectationSet load_expectations(const std::string& path);
ExpectationSet parse_expectations(const std::string& json_text);

struct AgreementRow {
    FeatureId feature;
    MismatchClass predicted = MismatchClass::natively_preserved;
    bool consistent = false;
    std::vector<std::string> details; // one line per check, "field[chain] expected X observed Y"
};

struct AgreementMatrix {
    std::vector<AgreementRow> rows;

    std::size_t consistent_count() const;
    bool all_consistent() const;
    std::string summary() const; // "N/M predictions consistent"
};

/// A feature is consistent when its observation booleans match the template
/// for its predicted class. Error(FeatureSetMismatch) when the report and the
/// observations do not cover the same feature set.
AgreementMatrix compare_prediction(const PreservationReport& report,
                                   const Observations& observations,
                                   const ExpectationSet& expectations);

std::string serialize_agreement(const AgreementMatrix& matrix);

} // namespace migrascope::sim
