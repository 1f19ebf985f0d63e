#pragma once

#include <array>
#include <string>
#include <vector>

namespace migrascope {

enum class FeatureKind { core, extended };

/// The four feature names every profile must carry.
const std::array<std::string, 4>& core_feature_names();
bool is_core_feature(const std::string& name);

struct FeatureId {
    std::string name;
    FeatureKind kind = FeatureKind::extended;

    bool operator==(const FeatureId&) const = default;
};

FeatureId make_feature_id(const std::string& name);

/// Short structured behavior record: what triggers the feature, what it
/// changes, and what is expected to hold around it.
struct BehaviorSpec {
    std::string trigger;
    std::string state_effect;
    std::string conditions;

    bool operator==(const BehaviorSpec&) const = default;
    bool filled() const;
};

/// Marker used by seed_core_features before any behavior is recorded.
extern const char* const unfilled_behavior;

struct FeatureProfile {
    std::string collection_id;
    // Order matters: core features first, extended in declaration order.
    std::vector<std::pair<FeatureId, BehaviorSpec>> features;

    bool has(const std::string& name) const;
    const BehaviorSpec* behavior(const std::string& name) const;
    bool operator==(const FeatureProfile&) const = default;
};

/// Returns a profile holding exactly the four core features with behavior
/// specs marked unfilled.
FeatureProfile seed_core_features();

std::string serialize_feature_profile(const FeatureProfile& profile);
FeatureProfile parse_feature_profile(const std::string& json_text);
FeatureProfile load_feature_profile(const std::string& path);
void save_feature_profile(const FeatureProfile& profile, const std::string& path);

} // namespace migrascope
