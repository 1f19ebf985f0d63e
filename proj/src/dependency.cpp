#include "migrascope/dependency.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

const DependencyBinding* BindingSet::find(const std::string& feature) const {
    for (const DependencyBinding& binding : bindings) {
        if (binding.feature == feature) {
            return &binding;
        }
    }
    return nullptr;
}

BindingSet parse_bindings(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "bindings");
    if (doc.value("schema", std::string{}) != "migrascope-bindings/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported bindings schema");
    }
    BindingSet set;
    set.platform_id = doc.value("platform_id", std::string{});
    for (const auto& [feature, ids] : doc.at("bindings").items()) {
        DependencyBinding binding;
        binding.feature = feature;
        for (const auto& id : ids) {
            binding.primitive_ids.insert(id.get<std::string>());
        }
        set.bindings.push_back(std::move(binding));
    }
    return set;
}

BindingSet load_bindings(const std::string& path) {
    return parse_bindings(read_text_file(path));
}

std::set<std::string> direct_dependencies(const FeatureId& feature, const BindingSet& bindings) {
    const DependencyBinding* binding = bindings.find(feature.name);
    if (binding == nullptr || binding->primitive_ids.empty()) {
        raise(ErrorKind::UnboundFeature, "no binding for feature " + feature.name);
    }
    return binding->primitive_ids;
}

std::set<std::string> closure(const std::set<std::string>& direct,
                              const ArchitectureProfile& profile) {
    std::set<std::string> out;
    std::deque<std::string> queue(direct.begin(), direct.end());
    while (!queue.empty()) {
        std::string id = queue.front();
        queue.pop_front();
        if (!out.insert(id).second) {
            continue;
        }
        const Primitive* primitive = profile.find(id);
        if (primitive == nullptr) {
            raise(ErrorKind::UnknownPrimitive, "id not in profile " + profile.platform_id + ": " + id);
        }
        for (const std::string& dep : primitive->builds_on) {
            queue.push_back(dep);
        }
    }
    return out;
}

std::vector<DependencySet> build_dependency_sets(const FeatureProfile& features,
                                                 const BindingSet& bindings,
                                                 const ArchitectureProfile& source_profile) {
    std::vector<DependencySet> sets;
    for (const auto& [feature, spec] : features.features) {
        (void)spec;
        DependencySet set;
        set.feature = feature;
        try {
            set.direct = direct_dependencies(feature, bindings);
            set.transitive = closure(set.direct, source_profile);
        } catch (const Error& error) {
            throw Error(error.kind(),
                        std::string(error.what()) + " (while mapping feature " + feature.name + ")");
        }
        sets.push_back(std::move(set));
    }
    return sets;
}

FeatureLayerMatrix feature_layer_matrix(const std::vector<DependencySet>& sets,
                                        const ArchitectureProfile& profile) {
    FeatureLayerMatrix matrix;
    for (const DependencySet& set : sets) {
        matrix.rows.push_back(set.feature);
        std::array<std::set<std::string>, layer_count> row;
        for (const std::string& id : set.transitive) {
            const Primitive* primitive = profile.find(id);
            if (primitive == nullptr) {
                raise(ErrorKind::UnknownPrimitive, "id not in profile: " + id);
            }
            row[static_cast<std::size_t>(primitive->layer)].insert(id);
        }
        matrix.cells.push_back(std::move(row));
    }
    return matrix;
}

std::string serialize_dependency_sets(const std::vector<DependencySet>& sets,
                                      const std::string& platform_id) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-dependency-sets/1";
    doc["platform_id"] = platform_id;
    doc["sets"] = nlohmann::json::array();
    for (const DependencySet& set : sets) {
        nlohmann::json node;
        node["feature"] = set.feature.name;
        node["direct"] = set.direct;
        node["transitive"] = set.transitive;
        doc["sets"].push_back(node);
    }
    return dump_canonical(doc);
}

std::string serialize_matrix(const FeatureLayerMatrix& matrix) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-feature-layer-matrix/1";
    doc["layers"] = nlohmann::json::array();
    for (Layer layer : layer_order()) {
        doc["layers"].push_back(to_string(layer));
    }
    doc["rows"] = nlohmann::json::array();
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        nlohmann::json row;
        row["feature"] = matrix.rows[i].name;
        nlohmann::json cells;
        for (Layer layer : layer_order()) {
            cells[to_string(layer)] = matrix.cell(i, layer);
        }
        row["cells"] = cells;
        doc["rows"].push_back(row);
    }
    return dump_canonical(doc);
}

std::string render_matrix_markdown(const FeatureLayerMatrix& matrix) {
    std::ostringstream out;
    out << "| Feature |";
    for (Layer layer : layer_order()) {
        out << " " << to_string(layer) << " |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < layer_count; ++i) {
        out << "---|";
    }
    out << "\n";
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        out << "| " << matrix.rows[i].name << " |";
        for (Layer layer : layer_order()) {
            const auto& cell = matrix.cell(i, layer);
            if (cell.empty()) {
                out << " |";
                continue;
            }
            out << " \xE2\x97\x8F"; // filled dot marks a non-empty cell
            for (const std::string& id : cell) {
                out << " `" << id << "`";
            }
            out << " |";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace migrascope
