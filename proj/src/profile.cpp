#include "migrascope/profile.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "migrascope/errors.hpp"
#include "migrascope/json_util.hpp"

namespace migrascope {

const Primitive* ArchitectureProfile::find(const std::string& id) const {
    for (const Primitive& primitive : primitives) {
        if (primitive.id == id) {
            return &primitive;
        }
    }
    return nullptr;
}

std::string ValidationResult::summary() const {
    if (ok()) {
        return "ok";
    }
    std::ostringstream out;
    out << violations.size() << " violation(s)";
    for (const Violation& violation : violations) {
        out << "\n  [" << violation.rule << "] " << violation.subject << ": " << violation.detail;
    }
    return out.str();
}

namespace {

// Exhaustive cycle search over builds_on, independent of the layer rule.
bool has_cycle(const ArchitectureProfile& profile) {
    enum class Mark { unvisited, active, done };
    std::map<std::string, Mark> marks;
    for (const Primitive& primitive : profile.primitives) {
        marks[primitive.id] = Mark::unvisited;
    }
    std::function<bool(const std::string&)> visit = [&](const std::string& id) {
        auto it = marks.find(id);
        if (it == marks.end()) {
            return false; // dangling edge, reported separately
        }
        if (it->second == Mark::active) {
            return true;
        }
        if (it->second == Mark::done) {
            return false;
        }
        it->second = Mark::active;
        const Primitive* primitive = profile.find(id);
        for (const std::string& dep : primitive->builds_on) {
            if (visit(dep)) {
                return true;
            }
        }
        it->second = Mark::done;
        return false;
    };
    for (const Primitive& primitive : profile.primitives) {
        if (visit(primitive.id)) {
            return true;
        }
    }
    return false;
}

} // namespace

ValidationResult validate_profile(const ArchitectureProfile& profile) {
    ValidationResult result;
    auto flag = [&](const std::string& rule, const std::string& subject, const std::string& detail) {
        result.violations.push_back({rule, subject, detail});
    };

    if (profile.platform_id.empty()) {
        flag("platform-id", "(profile)", "platform_id must be non-empty");
    }

    std::map<std::string, const Primitive*> by_id;
    for (const Primitive& primitive : profile.primitives) {
        if (primitive.id.empty()) {
            flag("primitive-id", "(empty)", "primitive id must be non-empty");
            continue;
        }
        if (!by_id.emplace(primitive.id, &primitive).second) {
            flag("unique-id", primitive.id, "duplicate primitive id");
        }
    }

    for (const Primitive& primitive : profile.primitives) {
        for (const std::string& dep : primitive.builds_on) {
            auto it = by_id.find(dep);
            if (it == by_id.end()) {
                flag("builds-on-resolution", primitive.id, "builds_on id not in profile: " + dep);
                continue;
            }
            if (!layer_below(it->second->layer, primitive.layer)) {
                flag("upward-dependency-rule", primitive.id,
                     "builds_on " + dep + " is not at a strictly lower layer");
            }
        }
    }

    if (has_cycle(profile)) {
        flag("acyclicity", "(profile)", "builds_on relation contains a cycle");
    }

    for (Layer layer : layer_order()) {
        bool populated = std::any_of(profile.primitives.begin(), profile.primitives.end(),
                                     [&](const Primitive& p) { return p.layer == layer; });
        if (!populated) {
            flag("layer-coverage", to_string(layer), "no primitive at this layer");
        }
    }

    std::set<std::string> offered;
    for (const Primitive& primitive : profile.primitives) {
        offered.insert(primitive.guarantees.begin(), primitive.guarantees.end());
    }
    std::set<std::string> rule_capabilities;
    for (const RealizationRule& rule : profile.realization_rules) {
        if (rule.via.empty()) {
            flag("realization-via", rule.capability, "via set must be non-empty");
        }
        for (const std::string& id : rule.via) {
            if (!by_id.count(id)) {
                flag("realization-resolution", rule.capability, "via id not in profile: " + id);
            }
        }
        if (offered.count(rule.capability)) {
            flag("realization-redundant", rule.capability,
                 "capability is directly offered by a primitive; rule is redundant");
        }
        if (!rule_capabilities.insert(rule.capability).second) {
            flag("realization-duplicate", rule.capability, "duplicate rule for capability");
        }
    }

    for (const auto& [tag, note] : profile.absence_notes) {
        (void)note;
        if (offered.count(tag)) {
            flag("absence-note-offered", tag, "absence note for a tag a primitive offers");
        }
    }

    return result;
}

namespace {

nlohmann::json primitive_to_json(const Primitive& primitive) {
    nlohmann::json node;
    node["id"] = primitive.id;
    node["layer"] = to_string(primitive.layer);
    node["role"] = primitive.role;
    node["guarantees"] = primitive.guarantees;
    node["builds_on"] = primitive.builds_on;
    if (!primitive.notes.empty()) {
        node["notes"] = primitive.notes;
    }
    return node;
}

Primitive primitive_from_json(const nlohmann::json& node, const std::string& origin) {
    Primitive primitive;
    if (!node.is_object() || !node.contains("id") || !node.contains("layer")) {
        raise(ErrorKind::ProfileParse, "primitive missing id/layer in " + origin);
    }
    primitive.id = node.at("id").get<std::string>();
    auto layer = layer_from_string(node.at("layer").get<std::string>());
    if (!layer) {
        raise(ErrorKind::ProfileParse,
              "unknown layer '" + node.at("layer").get<std::string>() + "' in " + origin);
    }
    primitive.layer = *layer;
    primitive.role = node.value("role", std::string{});
    for (const auto& tag : node.value("guarantees", nlohmann::json::array())) {
        primitive.guarantees.insert(tag.get<std::string>());
    }
    for (const auto& dep : node.value("builds_on", nlohmann::json::array())) {
        primitive.builds_on.insert(dep.get<std::string>());
    }
    primitive.notes = node.value("notes", std::string{});
    return primitive;
}

} // namespace

std::string serialize_profile(const ArchitectureProfile& profile) {
    nlohmann::json doc;
    doc["schema"] = "migrascope-profile/1";
    doc["platform_id"] = profile.platform_id;
    doc["version"] = profile.version;
    if (!profile.notes.empty()) {
        doc["notes"] = profile.notes;
    }

    std::vector<Primitive> primitives = profile.primitives;
    std::sort(primitives.begin(), primitives.end(),
              [](const Primitive& a, const Primitive& b) { return a.id < b.id; });
    doc["primitives"] = nlohmann::json::array();
    for (const Primitive& primitive : primitives) {
        doc["primitives"].push_back(primitive_to_json(primitive));
    }

    std::vector<RealizationRule> rules = profile.realization_rules;
    std::sort(rules.begin(), rules.end(),
              [](const RealizationRule& a, const RealizationRule& b) {
                  return a.capability < b.capability;
              });
    doc["realization_rules"] = nlohmann::json::array();
    for (const RealizationRule& rule : rules) {
        nlohmann::json node;
        node["capability"] = rule.capability;
        node["via"] = rule.via;
        if (!rule.notes.empty()) {
            node["notes"] = rule.notes;
        }
        doc["realization_rules"].push_back(node);
    }

    if (!profile.absence_notes.empty()) {
        doc["absence_notes"] = profile.absence_notes;
    }
    return dump_canonical(doc);
}

ArchitectureProfile parse_profile(const std::string& json_text) {
    nlohmann::json doc = parse_json_or_raise(json_text, "profile document");
    if (!doc.is_object() || doc.value("schema", std::string{}) != "migrascope-profile/1") {
        raise(ErrorKind::ProfileParse, "missing or unsupported profile schema");
    }
    ArchitectureProfile profile;
    profile.platform_id = doc.value("platform_id", std::string{});
    profile.version = doc.value("version", std::string{});
    profile.notes = doc.value("notes", std::string{});
    for (const auto& node : doc.value("primitives", nlohmann::json::array())) {
        profile.primitives.push_back(primitive_from_json(node, profile.platform_id));
    }
    std::sort(profile.primitives.begin(), profile.primitives.end(),
              [](const Primitive& a, const Primitive& b) { return a.id < b.id; });
    for (const auto& node : doc.value("realization_rules", nlohmann::json::array())) {
        RealizationRule rule;
        rule.capability = node.value("capability", std::string{});
        for (const auto& id : node.value("via", nlohmann::json::array())) {
            rule.via.insert(id.get<std::string>());
        }
        rule.notes = node.value("notes", std::string{});
        profile.realization_rules.push_back(rule);
    }
    std::sort(profile.realization_rules.begin(), profile.realization_rules.end(),
              [](const RealizationRule& a, const RealizationRule& b) {
                  return a.capability < b.capability;
              });
    if (doc.contains("absence_notes")) {
        for (const auto& [tag, note] : doc.at("absence_notes").items()) {
            profile.absence_notes[tag] = note.get<std::string>();
        }
    }
    return profile;
}

ArchitectureProfile load_profile(const std::string& path) {
    return parse_profile(read_text_file(path));
}

void save_profile(const ArchitectureProfile& profile, const std::string& path) {
    write_text_file(path, serialize_profile(profile));
}

int compare_versions(const std::string& lhs, const std::string& rhs) {
    auto parse = [](const std::string& text) {
        std::vector<long> parts;
        std::istringstream in(text);
        std::string piece;
        while (std::getline(in, piece, '.')) {
            parts.push_back(piece.empty() ? 0 : std::strtol(piece.c_str(), nullptr, 10));
        }
        return parts;
    };
    std::vector<long> a = parse(lhs), b = parse(rhs);
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    b.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

} // namespace migrascope
