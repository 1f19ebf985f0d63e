#include "migrascope/sim/observe.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope::sim {

std::optional<bool> ObservationDescriptor::field(const std::string& name,
                                                 const std::string& chain) const {
    auto pick = [&](const ChainPair& pair) -> std::optional<bool> {
        if (chain == "source") {
            return pair.source;
        }
        if (chain == "target") {
            return pair.target;
        }
        return std::nullopt;
    };
    if (name == "numeric-id-primary") {
        return pick(numeric_id_primary);
    }
    if (name == "owner-to-tokens-native") {
        return pick(owner_to_tokens_native);
    }
    if (name == "batch-atomic-single-tx") {
        return pick(batch_atomic_single_tx);
    }
    if (name == "transfer-owner-or-delegate") {
        return pick(transfer_owner_or_delegate);
    }
    if (!chain.empty()) {
        return std::nullopt;
    }
    if (name == "key-domain-reused") {
        return key_domain_reused;
    }
    if (name == "uri-identical") {
        return uri_identical;
    }
    if (name == "royalty-params-identical") {
        return royalty_params_identical;
    }
    return std::nullopt;
}

void ObservationDescriptor::set_field(const std::string& name, const std::string& chain,
                                      bool value) {
    auto put = [&](ChainPair& pair) {
        if (chain == "source") {
            pair.source = value;
        } else if (chain == "target") {
            pair.target = value;
        }
    };
    if (name == "numeric-id-primary") {
        put(numeric_id_primary);
    } else if (name == "owner-to-tokens-native") {
        put(owner_to_tokens_native);
    } else if (name == "batch-atomic-single-tx") {
        put(batch_atomic_single_tx);
    } else if (name == "transfer-owner-or-delegate") {
        put(transfer_owner_or_delegate);
    } else if (name == "key-domain-reused") {
        key_domain_reused = value;
    } else if (name == "uri-identical") {
        uri_identical = value;
    } else if (name == "royalty-params-identical") {
        royalty_params_identical = value;
    }
}

const ExpectationTemplate* ExpectationSet::find(const std::string& feature,
                                                MismatchClass predicted) const {
    for (const ExpectationTemplate& t : templates) {
        if (t.feature == feature && t.predicted == predicted) {
            return &t;
        }
    }
    return nullptr;
}

namespace {

MismatchClass mismatch_from_text(const std::string& text, const std::string& origin) {
    if (text == "natively-preserved") {
        return MismatchClass::natively_preserved;
    }
    if (text == "partial-mismatch") {
        return MismatchClass::partial_mismatch;
    }
    if (text == "complete-mismatch") {
        return MismatchClass::complete_mismatch;
    }
    raise(ErrorKind::ProfileParse, "unknown mismatch class '" + text + "' in " + origin);
}

} // namespace

ExpectationSet parse_expectations(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "expectations");
    if (doc.value("schema", std::string{}) != "migrascope-expectations/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported expectations schema");
    }
    ExpectationSet set;
    for (const auto& node : doc.value("templates", nlohmann::json::array())) {
        ExpectationTemplate t;
        t.feature = node.at("feature").get<std::string>();
        t.predicted = mismatch_from_text(node.at("predicted").get<std::string>(), "expectations");
        for (const auto& check : node.value("checks", nlohmann::json::array())) {
            ExpectationCheck c;
            c.field = check.at("field").get<std::string>();
            c.chain = check.value("chain", std::string{});
            c.expect = check.at("expect").get<bool>();
            t.checks.push_back(std::move(c));
        }
        set.templates.push_back(std::move(t));
    }
    return set;
}

ExpectationSet load_expectations(const std::string& path) {
    return parse_expectations(read_text_file(path));
}

std::size_t AgreementMatrix::consistent_count() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const AgreementRow& r) { return r.consistent; }));
}

bool AgreementMatrix::all_consistent() const {
    return consistent_count() == rows.size();
}

std::string AgreementMatrix::summary() const {
    std::ostringstream out;
    out << consistent_count() << "/" << rows.size() << " predictions consistent";
    return out.str();
}

AgreementMatrix compare_prediction(const PreservationReport& report,
                                   const Observations& observations,
                                   const ExpectationSet& expectations) {
    std::set<std::string> report_features;
    for (const ReportEntry& entry : report.entries) {
        report_features.insert(entry.feature.name);
    }
    std::set<std::string> observed_features;
    for (const auto& [feature, descriptor] : observations) {
        (void)descriptor;
        observed_features.insert(feature.name);
    }
    if (report_features != observed_features) {
        raise(ErrorKind::FeatureSetMismatch,
              "report and observations cover different feature sets");
    }

    AgreementMatrix matrix;
    for (const ReportEntry& entry : report.entries) {
        const ObservationDescriptor* descriptor = nullptr;
        for (const auto& [feature, candidate] : observations) {
            if (feature.name == entry.feature.name) {
                descriptor = &candidate;
                break;
            }
        }
        AgreementRow row;
        row.feature = entry.feature;
        row.predicted = entry.mismatch;
        const ExpectationTemplate* expectation =
            expectations.find(entry.feature.name, entry.mismatch);
        if (expectation == nullptr) {
            row.consistent = false;
            row.details.push_back("no expectation template for predicted class " +
                                  std::string(to_string(entry.mismatch)));
        } else {
            row.consistent = true;
            for (const ExpectationCheck& check : expectation->checks) {
                std::optional<bool> observed = descriptor->field(check.field, check.chain);
                bool pass = observed.has_value() && *observed == check.expect;
                if (!pass) {
                    row.consistent = false;
                }
                std::ostringstream line;
                line << check.field;
                if (!check.chain.empty()) {
                    line << "[" << check.chain << "]";
                }
                line << " expected " << (check.expect ? "true" : "false") << ", observed ";
                if (observed.has_value()) {
                    line << (*observed ? "true" : "false");
                } else {
                    line << "(missing)";
                }
                row.details.push_back(line.str());
            }
        }
        matrix.rows.push_back(std::move(row));
    }
    return matrix;
}

std::string serialize_agreement(const AgreementMatrix& matrix) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-agreement/1";
    doc["rows"] = nlohmann::json::array();
    for (const AgreementRow& row : matrix.rows) {
        nlohmann::json node;
        node["feature"] = row.feature.name;
        node["predicted"] = to_string(row.predicted);
        node["consistent"] = row.consistent;
        node["checks"] = row.details;
        doc["rows"].push_back(node);
    }
    doc["summary"] = {
        {"consistent", matrix.consistent_count()},
        {"total", matrix.rows.size()},
    };
    return dump_canonical(doc);
}

} // namespace migrascope::sim
