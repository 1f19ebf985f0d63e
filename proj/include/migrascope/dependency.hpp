#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "migrascope/feature.hpp"
#include "migrascope/profile.hpp"

namespace migrascope {

/// Direct feature-to-primitive bindings for one platform, curated as data.
struct DependencyBinding {
    std::string feature;
    std::set<std::string> primitive_ids;
};

struct BindingSet {
    std::string platform_id;
    std::vector<DependencyBinding> bindings;

    const DependencyBinding* find(const std::string& feature) const;
};

BindingSet load_bindings(const std::string& path);
BindingSet parse_bindings(const std::string& json_text);

/// Primitives a feature relies on: the declared direct set plus everything
/// reachable over builds_on edges.
struct DependencySet {
    FeatureId feature;
    std::set<std::string> direct;
    std::set<std::string> transitive; // closed superset of direct
};

/// Returns the bound ids verbatim; Error(UnboundFeature) when the feature has
/// no binding or an empty one.
std::set<std::string> direct_dependencies(const FeatureId& feature, const BindingSet& bindings);

/// Least fixpoint: smallest superset S of direct with builds_on(p) in S for
/// every p in S. Error(UnknownPrimitive) for ids missing from the profile.
std::set<std::string> closure(const std::set<std::string>& direct,
                              const ArchitectureProfile& profile);

std::vector<DependencySet> build_dependency_sets(const FeatureProfile& features,
                                                 const BindingSet& bindings,
                                                 const ArchitectureProfile& source_profile);

/// Rows = features in profile order, columns = the four layers, cells =
/// the transitive primitives of that feature at that layer.
struct FeatureLayerMatrix {
    std::vector<FeatureId> rows;
    std::vector<std::array<std::set<std::string>, layer_count>> cells; // one array per row

    const std::set<std::string>& cell(std::size_t row, Layer layer) const {
        return cells[row][static_cast<std::size_t>(layer)];
    }
};

FeatureLayerMatrix feature_layer_matrix(const std::vector<DependencySet>& sets,
                                        const ArchitectureProfile& profile);

std::string serialize_dependency_sets(const std::vector<DependencySet>& sets,
                                      const std::string& platform_id);
std::string serialize_matrix(const FeatureLayerMatrix& matrix);
/// Markdown table; non-empty cells are marked with a dot plus the ids.
std::string render_matrix_markdown(const FeatureLayerMatrix& matrix);

} // namespace migrascope
