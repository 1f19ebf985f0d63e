#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "migrascope/layer.hpp"

namespace migrascope {

/// One architectural capability at one layer of a platform.
struct Primitive {
    std::string id;
    Layer layer = Layer::cryptographic;
    std::string role;
    std::set<std::string> guarantees;
    std::set<std::string> builds_on; // ids of primitives at strictly lower layers
    std::string notes;               // curation provenance

    bool operator==(const Primitive&) const = default;
};

/// Curated declaration that a capability is achievable on this platform via a
/// combination of primitives, even though no single primitive offers it.
struct RealizationRule {
    std::string capability;
    std::set<std::string> via;
    std::string notes;

    bool operator==(const RealizationRule&) const = default;
};

struct ArchitectureProfile {
    std::string platform_id;
    std::string version;
    std::string notes;
    std::vector<Primitive> primitives; // kept sorted by id
    std::vector<RealizationRule> realization_rules; // kept sorted by capability
    std::map<std::string, std::string> absence_notes; // guarantee tag -> curator note

    const Primitive* find(const std::string& id) const;
    bool operator==(const ArchitectureProfile&) const = default;
};

struct Violation {
    std::string rule;    // e.g. "upward-dependency-rule"
    std::string subject; // offending primitive id / rule capability
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks every profile invariant; violations are data, not errors.
/// Never mutates the input and is idempotent.
ValidationResult validate_profile(const ArchitectureProfile& profile);

// Canonical JSON serialization: keys sorted, primitives sorted by id,
// 2-space indent, trailing newline. schema = "migrascope-profile/1".
std::string serialize_profile(const ArchitectureProfile& profile);
ArchitectureProfile parse_profile(const std::string& json_text);
ArchitectureProfile load_profile(const std::string& path);
void save_profile(const ArchitectureProfile& profile, const std::string& path);

/// Lexicographic comparison of dotted numeric versions ("1.2.0" style).
/// Missing components compare as zero.
int compare_versions(const std::string& lhs, const std::string& rhs);

} // namespace migrascope
