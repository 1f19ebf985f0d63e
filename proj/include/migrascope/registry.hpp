#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "migrascope/profile.hpp"

namespace migrascope {

struct Vocabulary {
    std::map<std::string, std::string> tags; // tag -> meaning

    bool known(const std::string& tag) const { return tags.count(tag) != 0; }
};

Vocabulary load_vocabulary(const std::string& path);

struct GuaranteeLookup {
    std::set<std::string> direct;            // primitive ids offering the tag
    std::vector<RealizationRule> realized_by; // rules realizing the tag
    std::optional<std::string> warning;       // set when the tag is off-vocabulary
};

/// Registered, validated platform profiles. Registration must be externally
/// serialized; lookups are safe concurrently.
class ProfileRegistry {
public:
    /// Error(InvalidProfile) when validation fails; Error(StaleVersion) when a
    /// profile with the same platform_id and a version that is not strictly
    /// greater is already registered.
    void register_profile(const ArchitectureProfile& profile);

    const ArchitectureProfile& lookup(const std::string& platform_id) const;
    bool has(const std::string& platform_id) const;
    std::vector<std::string> platform_ids() const; // sorted

    GuaranteeLookup find_by_guarantee(const std::string& platform_id,
                                      const std::string& tag) const;

    void set_vocabulary(Vocabulary vocabulary) { vocabulary_ = std::move(vocabulary); }
    const std::optional<Vocabulary>& vocabulary() const { return vocabulary_; }

private:
    std::map<std::string, ArchitectureProfile> profiles_;
    std::optional<Vocabulary> vocabulary_;
};

/// Loads every migrascope-profile/1 document in a directory (plus the
/// vocabulary file when present) into a fresh registry.
ProfileRegistry load_registry(const std::string& profile_dir);

} // namespace migrascope
