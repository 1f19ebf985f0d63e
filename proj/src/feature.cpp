#include "migrascope/feature.hpp"

#include <algorithm>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

const char* const unfilled_behavior = "unfilled";

const std::array<std::string, 4>& core_feature_names() {
    static const std::array<std::string, 4> names = {
        "identity-mechanism",
        "ownership-representation",
        "transfer-logic",
        "metadata-linkage",
    };
    return names;
}

bool is_core_feature(const std::string& name) {
    const auto& names = core_feature_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FeatureId make_feature_id(const std::string& name) {
    return FeatureId{name, is_core_feature(name) ? FeatureKind::core : FeatureKind::extended};
}

bool BehaviorSpec::filled() const {
    return !trigger.empty() && trigger != unfilled_behavior;
}

bool FeatureProfile::has(const std::string& name) const {
    return behavior(name) != nullptr;
}

const BehaviorSpec* FeatureProfile::behavior(const std::string& name) const {
    for (const auto& [id, spec] : features) {
        if (id.name == name) {
            return &spec;
        }
    }
    return nullptr;
}

FeatureProfile seed_core_features() {
    FeatureProfile profile;
    BehaviorSpec unfilled{unfilled_behavior, unfilled_behavior, unfilled_behavior};
    for (const std::string& name : core_feature_names()) {
        profile.features.emplace_back(make_feature_id(name), unfilled);
    }
    return profile;
}

std::string serialize_feature_profile(const FeatureProfile& profile) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-feature-profile/1";
    doc["collection_id"] = profile.collection_id;
    doc["features"] = nlohmann::json::array();
    for (const auto& [id, spec] : profile.features) {
        nlohmann::json node;
        node["name"] = id.name;
        node["kind"] = id.kind == FeatureKind::core ? "core" : "extended";
        node["behavior"] = {
            {"trigger", spec.trigger},
            {"state_effect", spec.state_effect},
            {"conditions", spec.conditions},
        };
        doc["features"].push_back(node);
    }
    return dump_canonical(doc);
}

FeatureProfile parse_feature_profile(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "feature profile");
    if (doc.value("schema", std::string{}) != "migrascope-feature-profile/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported feature-profile schema");
    }
    FeatureProfile profile;
    profile.collection_id = doc.value("collection_id", std::string{});
    for (const auto& node : doc.value("features", nlohmann::json::array())) {
        FeatureId id = make_feature_id(node.at("name").get<std::string>());
        BehaviorSpec spec;
        const auto& behavior = node.at("behavior");
        spec.trigger = behavior.value("trigger", std::string{});
        spec.state_effect = behavior.value("state_effect", std::string{});
        spec.conditions = behavior.value("conditions", std::string{});
        profile.features.emplace_back(id, spec);
    }
    for (const std::string& name : core_feature_names()) {
        if (!profile.has(name)) {
            raise(ErrorKind::ProfileParse, "feature profile lacks core feature " + name);
        }
    }
    return profile;
}

FeatureProfile load_feature_profile(const std::string& path) {
    return parse_feature_profile(read_text_file(path));
}

void save_feature_profile(const FeatureProfile& profile, const std::string& path) {
    write_text_file(path, serialize_feature_profile(profile));
}

} // namespace migrascope
