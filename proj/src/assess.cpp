#include "migrascope/assess.hpp"

#include <algorithm>
#include <sstream>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

const char* to_string(Availability value) {
    switch (value) {
    case Availability::available: return "AVAILABLE";
    case Availability::alternative: return "ALTERNATIVE";
    case Availability::absent: return "ABSENT";
    }
    return "?";
}

const char* to_string(MismatchClass value) {
    switch (value) {
    case MismatchClass::natively_preserved: return "natively-preserved";
    case MismatchClass::partial_mismatch: return "partial-mismatch";
    case MismatchClass::complete_mismatch: return "complete-mismatch";
    }
    return "?";
}

int mismatch_rank(MismatchClass value) {
    return static_cast<int>(value);
}

const ReportEntry* PreservationReport::entry(const std::string& feature_name) const {
    for (const ReportEntry& e : entries) {
        if (e.feature.name == feature_name) {
            return &e;
        }
    }
    return nullptr;
}

bool PreservationReport::any_complete_mismatch() const {
    return std::any_of(entries.begin(), entries.end(), [](const ReportEntry& e) {
        return e.mismatch == MismatchClass::complete_mismatch;
    });
}

AvailabilityClass classify_primitive(const std::string& primitive_id,
                                     const ArchitectureProfile& source_profile,
                                     const ArchitectureProfile& target_profile) {
    const Primitive* required = source_profile.find(primitive_id);
    if (required == nullptr) {
        raise(ErrorKind::UnknownPrimitive,
              primitive_id + " not in source profile " + source_profile.platform_id);
    }

    // Same canonical id on the target wins outright.
    if (const Primitive* same = target_profile.find(primitive_id)) {
        return {Availability::available, same->id, same->role};
    }

    // Same layer, guarantee-tag superset; ties break to the smallest id.
    const Primitive* best = nullptr;
    for (const Primitive& candidate : target_profile.primitives) {
        if (candidate.layer != required->layer) {
            continue;
        }
        bool superset = std::includes(candidate.guarantees.begin(), candidate.guarantees.end(),
                                      required->guarantees.begin(), required->guarantees.end());
        if (superset && (best == nullptr || candidate.id < best->id)) {
            best = &candidate;
        }
    }
    if (best != nullptr) {
        return {Availability::available, best->id, best->role};
    }

    if (required->guarantees.empty()) {
        // Nothing checkable to realize and no architectural slot matched.
        return {Availability::absent, "",
                "no target primitive at layer " + std::string(to_string(required->layer)) +
                    " matches the required role"};
    }

    // Every guarantee tag must be realized by a rule or a direct offering.
    std::vector<std::string> coverage;
    std::string cited_rule;
    std::string cited_offering;
    bool all_realized = true;
    std::vector<std::string> missing;
    for (const std::string& tag : required->guarantees) {
        const RealizationRule* rule = nullptr;
        for (const RealizationRule& candidate : target_profile.realization_rules) {
            if (candidate.capability == tag) {
                rule = &candidate;
                break;
            }
        }
        if (rule != nullptr) {
            std::string part = tag + " via rule '" + rule->capability + "'";
            if (!rule->notes.empty()) {
                part += ": " + rule->notes;
            }
            coverage.push_back(std::move(part));
            if (cited_rule.empty()) {
                cited_rule = rule->capability;
            }
            continue;
        }
        const Primitive* offering = nullptr;
        for (const Primitive& candidate : target_profile.primitives) {
            if (candidate.guarantees.count(tag) &&
                (offering == nullptr || candidate.id < offering->id)) {
                offering = &candidate;
            }
        }
        if (offering != nullptr) {
            coverage.push_back(tag + " offered by " + offering->id);
            if (cited_offering.empty()) {
                cited_offering = offering->id;
            }
            continue;
        }
        all_realized = false;
        missing.push_back(tag);
    }

    if (all_realized) {
        std::string detail;
        for (std::size_t i = 0; i < coverage.size(); ++i) {
            if (i) {
                detail += "; ";
            }
            detail += coverage[i];
        }
        return {Availability::alternative, !cited_rule.empty() ? cited_rule : cited_offering,
                detail};
    }

    std::string note;
    for (std::size_t i = 0; i < missing.size(); ++i) {
        if (i) {
            note += "; ";
        }
        auto curated = target_profile.absence_notes.find(missing[i]);
        if (curated != target_profile.absence_notes.end()) {
            note += missing[i] + ": " + curated->second;
        } else {
            note += "no target primitive or realization rule offers '" + missing[i] + "'";
        }
    }
    return {Availability::absent, "", note};
}

MismatchClass classify_feature(const std::map<std::string, AvailabilityClass>& availability) {
    if (availability.empty()) {
        raise(ErrorKind::EmptyDependencySet, "feature has an empty availability map");
    }
    bool any_absent = false;
    bool any_alternative = false;
    for (const auto& [id, verdict] : availability) {
        (void)id;
        if (verdict.kind == Availability::absent) {
            any_absent = true;
        } else if (verdict.kind == Availability::alternative) {
            any_alternative = true;
        }
    }
    if (any_absent) {
        return MismatchClass::complete_mismatch;
    }
    if (any_alternative) {
        return MismatchClass::partial_mismatch;
    }
    return MismatchClass::natively_preserved;
}

namespace {

std::string entry_reasoning(const ReportEntry& entry) {
    std::size_t available = 0, alternative = 0, absent = 0;
    std::vector<std::string> rules_used;
    std::vector<std::string> absent_ids;
    for (const auto& [id, verdict] : entry.availability) {
        switch (verdict.kind) {
        case Availability::available: ++available; break;
        case Availability::alternative:
            ++alternative;
            if (!verdict.evidence.empty() &&
                std::find(rules_used.begin(), rules_used.end(), verdict.evidence) ==
                    rules_used.end()) {
                rules_used.push_back(verdict.evidence);
            }
            break;
        case Availability::absent:
            ++absent;
            absent_ids.push_back(id);
            break;
        }
    }
    std::ostringstream out;
    out << available << " of " << entry.availability.size() << " required primitives available";
    if (alternative > 0) {
        out << "; " << alternative << " realized differently (";
        for (std::size_t i = 0; i < rules_used.size(); ++i) {
            if (i) {
                out << ", ";
            }
            out << rules_used[i];
        }
        out << ")";
    }
    if (absent > 0) {
        out << "; " << absent << " absent:";
        for (const std::string& id : absent_ids) {
            out << " " << id << " (" << entry.availability.at(id).detail << ")";
        }
    }
    return out.str();
}

} // namespace

PreservationReport assess(const FeatureProfile& features,
                          const std::vector<DependencySet>& dependency_sets,
                          const ArchitectureProfile& source_profile,
                          const ArchitectureProfile& target_profile) {
    PreservationReport report;
    report.source_platform = source_profile.platform_id;
    report.target_platform = target_profile.platform_id;

    auto find_set = [&](const std::string& name) -> const DependencySet* {
        for (const DependencySet& set : dependency_sets) {
            if (set.feature.name == name) {
                return &set;
            }
        }
        return nullptr;
    };

    for (const auto& [feature, spec] : features.features) {
        (void)spec;
        const DependencySet* set = find_set(feature.name);
        if (set == nullptr) {
            raise(ErrorKind::UnboundFeature, "no dependency set for feature " + feature.name);
        }
        if (set->transitive.empty()) {
            raise(ErrorKind::EmptyDependencySet, "feature " + feature.name +
                                                     " has an empty dependency set");
        }
        ReportEntry entry;
        entry.feature = feature;
        entry.direct = set->direct;
        for (const std::string& id : set->transitive) {
            try {
                entry.availability[id] = classify_primitive(id, source_profile, target_profile);
            } catch (const Error& error) {
                throw Error(error.kind(), std::string(error.what()) + " (feature " +
                                              feature.name + ")");
            }
            const Primitive* primitive = source_profile.find(id);
            report.source_primitives[id] = {primitive->layer, primitive->role};
        }
        entry.mismatch = classify_feature(entry.availability);
        entry.reasoning = entry_reasoning(entry);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string serialize_report(const PreservationReport& report) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-report/1";
    doc["source_platform"] = report.source_platform;
    doc["target_platform"] = report.target_platform;
    nlohmann::json primitives;
    for (const auto& [id, info] : report.source_primitives) {
        primitives[id] = {{"layer", to_string(info.layer)}, {"role", info.role}};
    }
    doc["source_primitives"] = primitives;
    doc["entries"] = nlohmann::json::array();
    for (const ReportEntry& entry : report.entries) {
        nlohmann::json node;
        node["feature"] = entry.feature.name;
        node["kind"] = entry.feature.kind == FeatureKind::core ? "core" : "extended";
        node["direct"] = entry.direct;
        nlohmann::json availability;
        for (const auto& [id, verdict] : entry.availability) {
            availability[id] = {
                {"kind", to_string(verdict.kind)},
                {"evidence", verdict.evidence},
                {"detail", verdict.detail},
            };
        }
        node["availability"] = availability;
        node["mismatch_class"] = to_string(entry.mismatch);
        node["reasoning"] = entry.reasoning;
        doc["entries"].push_back(node);
    }
    return dump_canonical(doc);
}

namespace {

Availability availability_from_string(const std::string& text) {
    if (text == "AVAILABLE") {
        return Availability::available;
    }
    if (text == "ALTERNATIVE") {
        return Availability::alternative;
    }
    if (text == "ABSENT") {
        return Availability::absent;
    }
    raise(ErrorKind::ProfileParse, "unknown availability class " + text);
}

MismatchClass mismatch_from_string(const std::string& text) {
    if (text == "natively-preserved") {
        return MismatchClass::natively_preserved;
    }
    if (text == "partial-mismatch") {
        return MismatchClass::partial_mismatch;
    }
    if (text == "complete-mismatch") {
        return MismatchClass::complete_mismatch;
    }
    raise(ErrorKind::ProfileParse, "unknown mismatch class " + text);
}

} // namespace

PreservationReport parse_report(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "report");
    if (doc.value("schema", std::string{}) != "migrascope-report/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported report schema");
    }
    PreservationReport report;
    report.source_platform = doc.value("source_platform", std::string{});
    report.target_platform = doc.value("target_platform", std::string{});
    if (doc.contains("source_primitives")) {
        for (const auto& [id, node] : doc.at("source_primitives").items()) {
            SourcePrimitiveInfo info;
            auto layer = layer_from_string(node.value("layer", std::string{}));
            if (!layer) {
                raise(ErrorKind::ProfileParse, "bad layer for source primitive " + id);
            }
            info.layer = *layer;
            info.role = node.value("role", std::string{});
            report.source_primitives[id] = info;
        }
    }
    for (const auto& node : doc.value("entries", nlohmann::json::array())) {
        ReportEntry entry;
        entry.feature = make_feature_id(node.at("feature").get<std::string>());
        for (const auto& id : node.value("direct", nlohmann::json::array())) {
            entry.direct.insert(id.get<std::string>());
        }
        for (const auto& [id, verdict] : node.at("availability").items()) {
            AvailabilityClass parsed;
            parsed.kind = availability_from_string(verdict.at("kind").get<std::string>());
            parsed.evidence = verdict.value("evidence", std::string{});
            parsed.detail = verdict.value("detail", std::string{});
            entry.availability[id] = parsed;
        }
        entry.mismatch = mismatch_from_string(node.at("mismatch_class").get<std::string>());
        entry.reasoning = node.value("reasoning", std::string{});
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace migrascope
