#include "migrascope/detection.hpp"

#include <algorithm>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

namespace {

std::vector<std::string> string_list(const nlohmann::json& node, const char* key) {
    std::vector<std::string> out;
    for (const auto& item : node.value(key, nlohmann::json::array())) {
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

DetectionRules parse_detection_rules(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "detection rules");
    if (doc.value("schema", std::string{}) != "migrascope-rules/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported rules schema");
    }
    DetectionRules rules;
    rules.version = doc.value("version", std::string{"0"});
    for (const auto& node : doc.value("hints", nlohmann::json::array())) {
        HintRule hint;
        hint.hint = node.at("hint").get<std::string>();
        hint.any_of_patterns = string_list(node, "any_of_patterns");
        hint.any_of_signatures = string_list(node, "any_of_signatures");
        hint.any_mutating_function = node.value("any_mutating_function", false);
        rules.hints.push_back(std::move(hint));
    }
    for (const auto& node : doc.value("rules", nlohmann::json::array())) {
        FeatureRule rule;
        rule.feature = node.at("feature").get<std::string>();
        rule.any_of = string_list(node, "any_of");
        rule.all_of = string_list(node, "all_of");
        if (rule.any_of.empty() && rule.all_of.empty()) {
            raise(ErrorKind::ProfileParse,
                  "rule for " + rule.feature + " has no predicate and would always fire");
        }
        const auto& behavior = node.at("behavior_template");
        rule.behavior.trigger = behavior.value("trigger", std::string{});
        rule.behavior.state_effect = behavior.value("state_effect", std::string{});
        rule.behavior.conditions = behavior.value("conditions", std::string{});
        rules.features.push_back(std::move(rule));
    }
    return rules;
}

DetectionRules load_detection_rules(const std::string& path) {
    return parse_detection_rules(read_text_file(path));
}

namespace {

bool rule_matches(const FeatureRule& rule, const ContractDescriptor& descriptor) {
    if (!rule.any_of.empty()) {
        bool any = false;
        for (const std::string& needle : rule.any_of) {
            for (const FunctionSig& fn : descriptor.functions) {
                if (fn.canonical().find(needle) != std::string::npos) {
                    any = true;
                    break;
                }
            }
            if (any) {
                break;
            }
        }
        if (!any) {
            return false;
        }
    }
    for (const std::string& hint : rule.all_of) {
        if (!descriptor.storage_hints.count(hint)) {
            return false;
        }
    }
    return true;
}

} // namespace

FeatureProfile derive_feature_profile(const ContractDescriptor& descriptor,
                                      const DetectionRules& rules,
                                      const std::string& collection_id) {
    FeatureProfile profile = seed_core_features();
    profile.collection_id = collection_id;

    std::map<std::string, BehaviorSpec> claimed;
    for (const FeatureRule& rule : rules.features) {
        if (!rule_matches(rule, descriptor)) {
            continue;
        }
        auto [it, inserted] = claimed.emplace(rule.feature, rule.behavior);
        if (!inserted && !(it->second == rule.behavior)) {
            raise(ErrorKind::RuleConflict,
                  "two rules claim feature " + rule.feature + " with different behavior templates");
        }
        if (inserted) {
            if (is_core_feature(rule.feature)) {
                for (auto& [id, spec] : profile.features) {
                    if (id.name == rule.feature) {
                        spec = rule.behavior;
                    }
                }
            } else {
                profile.features.emplace_back(make_feature_id(rule.feature), rule.behavior);
            }
        }
    }
    return profile;
}

} // namespace migrascope
