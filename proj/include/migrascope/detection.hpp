#pragma once

#include <string>
#include <vector>

#include "migrascope/feature.hpp"
#include "migrascope/scanner.hpp"

namespace migrascope {

/// One declarative detection rule: when the predicate matches a descriptor,
/// the named feature is added (extended) or its behavior filled (core).
struct FeatureRule {
    std::string feature;
    std::vector<std::string> any_of; // signature substrings; empty = no signature requirement
    std::vector<std::string> all_of; // storage hints that must all be present
    BehaviorSpec behavior;
};

struct DetectionRules {
    std::string version;
    std::vector<HintRule> hints;
    std::vector<FeatureRule> features;
};

DetectionRules load_detection_rules(const std::string& path);
DetectionRules parse_detection_rules(const std::string& json_text);

/// Starts from seed_core_features() and applies every matching rule.
/// Deterministic: same descriptor + rules give an identical profile.
/// Raises Error(RuleConflict) when two fired rules disagree on one feature.
FeatureProfile derive_feature_profile(const ContractDescriptor& descriptor,
                                      const DetectionRules& rules,
                                      const std::string& collection_id);

} // namespace migrascope
