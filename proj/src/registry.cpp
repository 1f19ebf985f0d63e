#include "migrascope/registry.hpp"

#include <algorithm>
#include <filesystem>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

Vocabulary load_vocabulary(const std::string& path) {
    nlohmann::json doc = parse_json_or_raise(read_text_file(path), path);
    if (doc.value("schema", std::string{}) != "migrascope-vocabulary/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported vocabulary schema");
    }
    Vocabulary vocabulary;
    for (const auto& node : doc.value("tags", nlohmann::json::array())) {
        vocabulary.tags[node.at("tag").get<std::string>()] =
            node.value("meaning", std::string{});
    }
    return vocabulary;
}

void ProfileRegistry::register_profile(const ArchitectureProfile& profile) {
    ValidationResult validation = validate_profile(profile);
    if (!validation.ok()) {
        raise(ErrorKind::InvalidProfile,
              profile.platform_id + " failed validation: " + validation.summary());
    }
    auto it = profiles_.find(profile.platform_id);
    if (it != profiles_.end() && compare_versions(profile.version, it->second.version) <= 0) {
        raise(ErrorKind::StaleVersion,
              profile.platform_id + " " + profile.version + " does not supersede " +
                  it->second.version);
    }
    profiles_[profile.platform_id] = profile;
}

const ArchitectureProfile& ProfileRegistry::lookup(const std::string& platform_id) const {
    auto it = profiles_.find(platform_id);
    if (it == profiles_.end()) {
        raise(ErrorKind::UnknownPlatform, "no registered profile for " + platform_id);
    }
    return it->second;
}

bool ProfileRegistry::has(const std::string& platform_id) const {
    return profiles_.count(platform_id) != 0;
}

std::vector<std::string> ProfileRegistry::platform_ids() const {
    std::vector<std::string> ids;
    for (const auto& [id, profile] : profiles_) {
        (void)profile;
        ids.push_back(id);
    }
    return ids;
}

GuaranteeLookup ProfileRegistry::find_by_guarantee(const std::string& platform_id,
                                                   const std::string& tag) const {
    const ArchitectureProfile& profile = lookup(platform_id);
    GuaranteeLookup lookup_result;
    for (const Primitive& primitive : profile.primitives) {
        if (primitive.guarantees.count(tag)) {
            lookup_result.direct.insert(primitive.id);
        }
    }
    for (const RealizationRule& rule : profile.realization_rules) {
        if (rule.capability == tag) {
            lookup_result.realized_by.push_back(rule);
        }
    }
    if (vocabulary_ && !vocabulary_->known(tag)) {
        lookup_result.warning = "unknown tag: " + tag;
    }
    return lookup_result;
}

ProfileRegistry load_registry(const std::string& profile_dir) {
    namespace fs = std::filesystem;
    ProfileRegistry registry;
    if (!fs::is_directory(profile_dir)) {
        raise(ErrorKind::Io, "profile directory not found: " + profile_dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(profile_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
        std::string text = read_text_file(file.string());
        nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            continue;
        }
        std::string schema = doc.value("schema", std::string{});
        if (schema == "migrascope-vocabulary/1") {
            registry.set_vocabulary(load_vocabulary(file.string()));
        } else if (schema == "migrascope-profile/1") {
            try {
                registry.register_profile(parse_profile(text));
            } catch (const Error& error) {
                // Older snapshots may sit beside the current one; the newest
                // version wins regardless of filename order.
                if (error.kind() != ErrorKind::StaleVersion) {
                    throw;
                }
            }
        }
    }
    return registry;
}

} // namespace migrascope
