#pragma once

#include <map>
#include <string>
#include <vector>

#include "migrascope/dependency.hpp"
#include "migrascope/feature.hpp"
#include "migrascope/profile.hpp"

namespace migrascope {

enum class Availability { available, alternative, absent };
const char* to_string(Availability value);

/// Per-primitive verdict with its evidence:
///  - available:   evidence = matching target primitive id
///  - alternative: evidence = realization rule capability (or offering id when
///                 every tag is covered by direct offerings alone)
///  - absent:      evidence empty, detail carries the note
struct AvailabilityClass {
    Availability kind = Availability::absent;
    std::string evidence;
    std::string detail;

    bool operator==(const AvailabilityClass&) const = default;
};

enum class MismatchClass { natively_preserved, partial_mismatch, complete_mismatch };
const char* to_string(MismatchClass value);
/// Position in the dominance order preserved < partial < complete.
int mismatch_rank(MismatchClass value);

struct ReportEntry {
    FeatureId feature;
    std::set<std::string> direct; // declared direct dependencies
    std::map<std::string, AvailabilityClass> availability; // one entry per transitive primitive
    MismatchClass mismatch = MismatchClass::natively_preserved;
    std::string reasoning;
};

struct SourcePrimitiveInfo {
    Layer layer = Layer::cryptographic;
    std::string role;

    bool operator==(const SourcePrimitiveInfo&) const = default;
};

/// Self-contained preservation-outcome report: entries follow the feature
/// profile's order and carry enough source-side detail to render offline.
struct PreservationReport {
    std::string source_platform;
    std::string target_platform;
    std::map<std::string, SourcePrimitiveInfo> source_primitives;
    std::vector<ReportEntry> entries;

    const ReportEntry* entry(const std::string& feature_name) const;
    bool any_complete_mismatch() const;
};

/// Classifies one required source primitive against the target profile.
/// available when the target carries the same canonical id or a same-layer
/// primitive whose guarantee tags are a superset; otherwise alternative when
/// every guarantee tag is realized by a rule or a direct offering; otherwise
/// absent. Ties among available matches break to the smallest target id.
AvailabilityClass classify_primitive(const std::string& primitive_id,
                                     const ArchitectureProfile& source_profile,
                                     const ArchitectureProfile& target_profile);

/// Feature outcome from its primitive verdicts; Error(EmptyDependencySet)
/// when the map is empty.
MismatchClass classify_feature(const std::map<std::string, AvailabilityClass>& availability);

PreservationReport assess(const FeatureProfile& features,
                          const std::vector<DependencySet>& dependency_sets,
                          const ArchitectureProfile& source_profile,
                          const ArchitectureProfile& target_profile);

std::string serialize_report(const PreservationReport& report);
PreservationReport parse_report(const std::string& json_text);

} // namespace migrascope
